#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "grassdual/linalg.hpp"
#include "grassdual/numeric.hpp"
#include "grassdual/partitions.hpp"

namespace grassdual {

/// One linear condition: constant + coeffs . x >= 0 (or == 0 when used as an
/// affine-hull equation). Coefficients are indexed like the owning polytope's
/// coordinate labels.
struct Inequality {
    Rat constant;
    RatVec coeffs;
};

/// Vertex representation of a polytope. `coords` names each ambient axis by a
/// partition label; it may be empty for unlabeled geometry, in which case only
/// the common length of the point vectors defines the ambient space. The
/// vertex list of a value produced by this module is irredundant: no vertex is
/// a convex combination of the others.
struct VPolytope {
    std::vector<Partition> coords;
    std::vector<RatVec> vertices;

    std::size_t dim() const {
        return vertices.empty() ? coords.size() : vertices.front().size();
    }
};

/// Inequality representation of a polytope. `equations` cut out the affine
/// hull when the polytope is not full-dimensional; `inequalities` bound it
/// inside that affine subspace. Boundedness is a property computed from the
/// system (see is_bounded), never a stored assumption.
struct HPolytope {
    std::vector<Partition> coords;
    std::vector<Inequality> inequalities;
    std::vector<Inequality> equations;
    std::size_t ambient_dim = 0;
};

/// The data of one tropical mutation: coordinate `mu1` is replaced by `mu1p`,
/// and `ring` lists the four neighboring labels mu2..mu5 in cyclic order
/// around the mutated one. Ring entries may be the empty partition, which is
/// read as the constant coordinate 0.
struct MutationMapSpec {
    Partition mu1;
    Partition mu1p;
    std::array<Partition, 4> ring;
};

/// Outcome of an equality test, with a human-readable witness on failure.
struct EqualityCertificate {
    bool equal = false;
    std::string detail;
};

/// Scales each inequality to a primitive integer vector, removes exact
/// duplicates, and orders the list lexicographically. Equations get the same
/// treatment with a sign convention (first nonzero entry positive).
HPolytope normalized(HPolytope h);

/// Enumerates the vertices of the polytope { x : equations hold, inequalities
/// hold } by exact double description. Throws PolytopeError when the set is
/// unbounded (including systems whose homogenization is not pointed). An
/// infeasible system yields an empty vertex list.
VPolytope vertices_of(const HPolytope& h);

/// True when the solution set of `h` is bounded (an infeasible system counts
/// as bounded).
bool is_bounded(const HPolytope& h);

/// Convex hull: returns the irredundant vertex list together with a facet
/// description. When the points do not affinely span, the facets are computed
/// inside the affine hull and `equations` carries the hull's defining
/// equations; a single point yields one equation per coordinate. All input
/// points must agree with `coords` in length (or with each other when coords
/// is empty). Throws PolytopeError on an empty point list.
std::pair<VPolytope, HPolytope> hull(const std::vector<RatVec>& points,
                                     std::vector<Partition> coords = {});

/// All integer points of the (bounded) solution set, in lexicographic order.
std::vector<IntVec> lattice_points(const HPolytope& h);

/// The dilation r * P in both representations (r >= 0).
VPolytope dilate(const VPolytope& p, const Rat& r);
HPolytope dilate(const HPolytope& h, const Rat& r);

/// Minkowski sum: hull of all pairwise vertex sums. Coordinate labels must
/// agree.
VPolytope minkowski_sum(const VPolytope& a, const VPolytope& b);

/// Applies the tropical exchange map to every point: the mu1 coordinate v is
/// replaced by min(v_{mu2} + v_{mu4}, v_{mu3} + v_{mu5}) - v, all other
/// coordinates are kept, and the axis is relabeled mu1p. Output axes are
/// re-sorted into coordinate significance order. Requires labeled input with
/// mu1 present, mu1p absent, ring labels present or empty, and all five map
/// labels distinct.
VPolytope pl_mutate(const VPolytope& p, const MutationMapSpec& map);

/// Decides conv(a) == conv(b) by checking every vertex of each side against
/// the other side's inequality description. On failure, `detail` names a
/// separating vertex and the condition it violates.
EqualityCertificate equal_polytopes(const VPolytope& a, const HPolytope& a_facets,
                                    const VPolytope& b, const HPolytope& b_facets);

/// Renders a point or an inequality for certificates and reports.
std::string to_string(const RatVec& point);
std::string to_string(const Inequality& iq);

}  // namespace grassdual
