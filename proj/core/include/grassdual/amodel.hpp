#pragma once

#include <map>
#include <utility>
#include <vector>

#include "grassdual/laurent.hpp"
#include "grassdual/network.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"
#include "grassdual/polytope.hpp"

namespace grassdual {

/// The polytope axes of a chart: its N nonempty face labels in coordinate
/// significance order.
std::vector<Partition> chart_coordinates(const FaceLabeling& labeling);

/// Exponent vector of the lexicographically minimal term of f, reported
/// against the axes `coords`. Minimality is judged with variables compared
/// in the order given by `order` (empty means: use coords); every partition
/// variable of f must appear in coords, and coords must be a subset of
/// order's labels. Throws PolynomialError on the zero polynomial. For terms
/// with a strongly minimal monomial the result is order-independent.
IntVec val(const LaurentPoly& f, const std::vector<Partition>& coords,
           const std::vector<Partition>& order = {});

/// Valuations of every Pluecker coordinate P_J of the chart carried by the
/// oriented graph, J running over all (n-k)-subsets of {1..n}; rows are
/// reported against chart_coordinates(labeling).
std::map<IndexSubset, IntVec> valuation_table(const PerfectOrientation& o,
                                              const FaceLabeling& labeling);

/// Newton-Okounkov polytope of the chart at degree r >= 1: the convex hull
/// of the valuations of all degree-r Pluecker monomials. Computed twice --
/// as that hull, and as the r-th dilation of the degree-1 polytope -- and
/// the two must agree; disagreement throws PolytopeError. Returns the
/// vertex and facet descriptions.
std::pair<VPolytope, HPolytope> no_polytope(const PerfectOrientation& o,
                                            const FaceLabeling& labeling, int r);

}  // namespace grassdual
