#pragma once
/// \file
/// Deterministic serializers: JSON, DOT, TSV, and plain-text exports for
/// graphs, orientations, Laurent polynomials, polytopes, valuation tables,
/// and superpotentials. Every function produces byte-stable output for equal
/// inputs (fixed key order, fixed record order, no timestamps), so the
/// results are suitable for golden-file tests.

#include <map>
#include <string>
#include <vector>

#include "grassdual/laurent.hpp"
#include "grassdual/network.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"
#include "grassdual/polytope.hpp"

namespace grassdual {

/// Graph as JSON: {"shape":{"k","n"}, "vertices":[{"id","color"}],
/// "boundary":[edge ids clockwise], "boundary_edges":[same list],
/// "edges":[[v,w],...], "rotation":{"<vertex id>":[edge ids clockwise]}}.
/// "boundary" and "boundary_edges" carry the identical list of the edges
/// incident to b_1..b_n in clockwise boundary order.
std::string graph_json(const PlabicGraph& g);

/// Graph JSON extended with {"directions":{"<edge id>": +1|-1}} and
/// {"sources":[...]}; direction +1 means the edge runs from its stored tail
/// endpoint to its stored head endpoint, -1 the reverse.
std::string orientation_json(const PerfectOrientation& o);

/// Laurent polynomial as JSON: a list of {"coeff": "<integer>",
/// "exponents": {"<var>": int}} in the polynomial's canonical term order.
/// Partition variables are named `family[2,1]`; the quantum variable is "q".
std::string laurent_json(const LaurentPoly& f, char family = 'x');

/// Vertex/facet presentation of one polytope as JSON:
/// {"coords":[names], "vertices":[[rational strings]],
///  "inequalities":[{"const","coeffs"}], "equations":[...]}.
std::string polytope_json(const VPolytope& v, const HPolytope& h);

/// Canonical plain-text dump of the same data, one record per line, for
/// diff-based golden tests.
std::string polytope_text(const VPolytope& v, const HPolytope& h);

/// Valuation table as TSV: header `subset<TAB>label...`, then one row per
/// subset in increasing subset order.
std::string valuation_table_tsv(const std::map<IndexSubset, IntVec>& table,
                                const std::vector<Partition>& coords);

/// Valuation table as JSON: {"coords":[names], "rows":{"<subset>":[ints]}}.
std::string valuation_table_json(const std::map<IndexSubset, IntVec>& table,
                                 const std::vector<Partition>& coords);

/// Superpotential text in division form, one summand per term:
/// `p[1] + p[1,1]/p[1] + ... + q*p[2]/p[3,3]`. Positive exponents multiply
/// into the numerator, negative ones into the denominator.
std::string superpotential_text(const LaurentPoly& w, char family = 'p');

/// Flows as vertex-id walks for debugging:
/// [{"source","sink","vertices":[...]}, ...] per flow.
std::string flows_json(const PerfectOrientation& o, const std::vector<Flow>& flows);

/// Graphviz DOT for an undirected plabic graph: internal vertices are filled
/// circles (black/white), boundary vertices are plain labels 1..n, edges in
/// id order. When `labels` is given, faces are annotated in a graph-level
/// label listing each face's partition.
std::string graph_dot(const PlabicGraph& g, const FaceLabeling* labels = nullptr);

/// Directed variant of graph_dot following the orientation's tail -> head.
std::string orientation_dot(const PerfectOrientation& o, const FaceLabeling* labels = nullptr);

}  // namespace grassdual
