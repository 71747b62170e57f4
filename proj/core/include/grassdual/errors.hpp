#pragma once

#include <stdexcept>
#include <string>

namespace grassdual {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid (k, n) shape or an object that does not fit its shape.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// Malformed partition or index subset.
class CombinatoricsError : public Error {
public:
    using Error::Error;
};

/// Structurally invalid graph: bad rotation system, degree violations,
/// failed planarity (Euler) check, isolated components.
class GraphError : public Error {
public:
    using Error::Error;
};

/// A move was requested at a location where its preconditions fail.
class MoveError : public Error {
public:
    using Error::Error;
};

/// Face labeling produced labels of the wrong cardinality or with repeats.
class LabelingError : public Error {
public:
    using Error::Error;
};

/// No valid perfect orientation, or an orientation violating its invariants.
class OrientationError : public Error {
public:
    using Error::Error;
};

/// Laurent polynomial errors: inexact division, evaluation at a pole,
/// valuation of the zero polynomial, incomplete variable order.
class PolynomialError : public Error {
public:
    using Error::Error;
};

/// Polytope errors: empty/unbounded input where a bounded polytope is
/// required, dimension mismatches.
class PolytopeError : public Error {
public:
    using Error::Error;
};

/// Parse errors for the textual Laurent form and JSON inputs.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace grassdual
