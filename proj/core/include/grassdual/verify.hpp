#pragma once
/// \file
/// Verification driver: enumerate the move class of the rectangles graph,
/// compute the network-chart polytope and the tropical superpotential
/// polytope for every member and every requested degree, check that the two
/// agree, and check the lattice-point count against the filling-count
/// oracle computed at run start.

#include <string>
#include <vector>

#include "grassdual/numeric.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"

namespace grassdual {

/// Outcome of checking one move-class member at one degree.
struct MemberResult {
    std::string encoding;         ///< canonical id of the graph
    std::size_t path_length = 0;  ///< move-path length from the rectangles seed
    int r = 0;
    std::size_t no_vertex_count = 0;  ///< vertices of the network-chart polytope
    std::size_t q_facet_count = 0;    ///< inequalities of the tropical polytope
    std::size_t lattice_count = 0;
    bool equal = false;         ///< the two polytopes coincide
    bool counts_match = false;  ///< lattice count equals the oracle
    std::string certificate;    ///< witness of the first violation, empty on success

    bool ok() const { return equal && counts_match; }
};

struct VerificationReport {
    GrassmannShape shape{1, 2};
    std::vector<int> r_values;
    bool complete = false;           ///< BFS closed below the budget
    std::size_t member_count = 0;
    std::vector<Int> oracle_counts;  ///< expected lattice counts, one per degree
    std::vector<MemberResult> results;  ///< member-major, degree-minor order
    double seconds = 0.0;  ///< wall time; excluded from the comparison payload

    bool ok() const;
};

/// Check one member at one degree against the expected lattice count.
/// Exceptions from the polytope kernel are captured into the certificate.
MemberResult verify_member(const MoveClassMember& member, int r, const Int& oracle);

/// Full verification: BFS from the rectangles graph (throws MoveError when
/// `budget` is exhausted before the class closes), then verify every member
/// at every degree in `r_values`.
VerificationReport cmd_verify(const GrassmannShape& shape, const std::vector<int>& r_values,
                              int budget = 10000);

/// Deterministic text rendering. Only the final "time:" line varies between
/// runs on equal inputs; everything above it is part of the stable payload.
std::string report_text(const VerificationReport& report);

}  // namespace grassdual
