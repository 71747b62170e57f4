#pragma once

#include <map>
#include <vector>

#include "grassdual/laurent.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"

/// Perfect orientations of plabic graphs and the flow expansion of Plücker
/// coordinates in the associated network chart.

namespace grassdual {

/// A perfect orientation: every internal black vertex has exactly one
/// outgoing edge and every internal white vertex exactly one incoming edge.
/// The boundary marks whose edge points into the disk form the source set.
class PerfectOrientation {
  public:
    /// Validates perfectness; throws OrientationError otherwise.
    PerfectOrientation(PlabicGraph graph, EdgeDirections directions);

    const PlabicGraph& graph() const { return graph_; }
    const EdgeDirections& directions() const { return dirs_; }
    const IndexSubset& sources() const { return sources_; }
    bool acyclic() const { return acyclic_; }

    /// Tail/head of edge e under this orientation.
    int tail(int e) const;
    int head(int e) const;
    /// Out-darts of v in rotation order (dart tails at v).
    std::vector<int> out_edges(int v) const;

  private:
    PlabicGraph graph_;
    EdgeDirections dirs_;
    IndexSubset sources_;
    bool acyclic_ = false;
};

/// An acyclic perfect orientation with sources {1..n-k} for a reduced graph
/// of the standard type. The orientation of the rectangles graph is carried
/// along a move path discovered by a class search from the rectangles seed,
/// so the returned orientation lives on the search's normal form of g (same
/// canonical encoding, freshly numbered vertices).
///
/// Throws OrientationError when no move path to g is found within budget.
PerfectOrientation acyclic_orientation(const PlabicGraph& g, int budget = 10000);

/// One directed walk of a flow: boundary source/sink marks and the edge ids
/// walked, in order. A trivial walk (source == sink, no edges) occupies just
/// its boundary vertex.
struct FlowWalk {
    int source = 0;
    int sink = 0;
    std::vector<int> edges;
};

/// A family of pairwise vertex-disjoint walks from the orientation's excess
/// sources to the requested sinks, plus one trivial walk per common mark.
struct Flow {
    std::vector<FlowWalk> walks;
};

/// All flows from the orientation's sources to J, enumerated depth-first
/// with vertex-usage masking. Walk w joins the w-th excess source (taken in
/// decreasing order) to the w-th excess sink (increasing order); trivial
/// walks come first. Requires an acyclic orientation and |J| = n-k.
std::vector<Flow> enumerate_flows(const PerfectOrientation& o, const IndexSubset& J);

/// Product over the flow's walks of x_mu over the face labels lying to the
/// left of the walk; the region is closed off by the rim arcs from the
/// walk's sink clockwise around to its source.
LaurentPoly flow_weight(const PerfectOrientation& o, const FaceLabeling& labeling,
                        const Flow& f);

/// The flow polynomial P_J = sum of flow weights, with every occurrence of
/// the empty-face variable replaced by the inverse of the product of all
/// nonempty face variables.
LaurentPoly plucker_polynomial(const PerfectOrientation& o, const IndexSubset& J);

/// P_J for every (n-k)-subset J, keyed by J.
std::map<IndexSubset, LaurentPoly> all_plucker_polynomials(const PerfectOrientation& o);

/// The greedy minimal flow in the rectangles graph: walks are chosen in
/// pairing order, each hugging the southeast border (south before west)
/// among paths vertex-disjoint from the earlier ones.
Flow minimal_flow_rec(const GrassmannShape& shape, const IndexSubset& J);

/// Weight of the minimal flow in the rectangles chart, as a monomial.
LaurentPoly minimal_flow_weight_rec(const GrassmannShape& shape, const IndexSubset& J);

}  // namespace grassdual
