#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "grassdual/numeric.hpp"

namespace grassdual {

/// Dense matrix of exact rationals, row-major.
struct RatMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rat> a;

    RatMatrix() = default;
    RatMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}

    Rat& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    const Rat& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

    RatVec row(std::size_t i) const {
        return RatVec(a.begin() + static_cast<std::ptrdiff_t>(i * cols),
                      a.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols));
    }

    static RatMatrix from_rows(const std::vector<RatVec>& rows_in);
};

std::size_t rank(RatMatrix m);

/// Indices of a maximal linearly independent subset of the given rows,
/// chosen greedily in the order supplied.
std::vector<std::size_t> independent_rows(const std::vector<RatVec>& rows);

/// Solve A x = b. Returns one solution or nullopt if inconsistent.
std::optional<RatVec> solve(RatMatrix a, RatVec b);

/// Basis of the right null space { x : A x = 0 }.
std::vector<RatVec> nullspace(RatMatrix m);

/// Inverse of a square nonsingular matrix; throws PolytopeError if singular.
RatMatrix inverse(RatMatrix m);

}  // namespace grassdual
