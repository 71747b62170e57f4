#include "grassdual/network.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "grassdual/errors.hpp"

namespace grassdual {

namespace {

bool digraph_is_acyclic(const PlabicGraph& g, const EdgeDirections& dirs) {
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(g.num_vertices()));
    std::vector<int> indeg(static_cast<std::size_t>(g.num_vertices()), 0);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto [v, w] = g.edge(e);
        const int tail = dirs[static_cast<std::size_t>(e)] > 0 ? v : w;
        const int head = dirs[static_cast<std::size_t>(e)] > 0 ? w : v;
        succ[static_cast<std::size_t>(tail)].push_back(head);
        ++indeg[static_cast<std::size_t>(head)];
    }
    std::deque<int> ready;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        const int v = ready.front();
        ready.pop_front();
        ++seen;
        for (int w : succ[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
    return seen == g.num_vertices();
}

/// Split J against the source set: marks in both (trivial walks), excess
/// sources in decreasing order, and excess sinks in increasing order.
struct SinkSplit {
    std::vector<int> trivial;
    std::vector<int> sources;
    std::vector<int> sinks;
};

SinkSplit split_sinks(const PerfectOrientation& o, const IndexSubset& J) {
    const PlabicGraph& g = o.graph();
    if (static_cast<int>(J.size()) != g.shape().rows())
        throw CombinatoricsError("sink set must have exactly " +
                                 std::to_string(g.shape().rows()) + " marks");
    for (int j : J.elems())
        if (j < 1 || j > g.num_boundary())
            throw CombinatoricsError("sink mark " + std::to_string(j) + " is out of range");
    SinkSplit s;
    for (int i : o.sources().elems())
        if (J.contains(i))
            s.trivial.push_back(i);
        else
            s.sources.push_back(i);
    std::reverse(s.sources.begin(), s.sources.end());
    for (int j : J.elems())
        if (!o.sources().contains(j)) s.sinks.push_back(j);
    return s;
}

}  // namespace

PerfectOrientation::PerfectOrientation(PlabicGraph graph, EdgeDirections directions)
    : graph_(std::move(graph)), dirs_(std::move(directions)) {
    if (static_cast<int>(dirs_.size()) != graph_.num_edges())
        throw OrientationError("one direction per edge is required");
    for (signed char d : dirs_)
        if (d != 1 && d != -1) throw OrientationError("edge directions must be +1 or -1");
    std::vector<int> outs(static_cast<std::size_t>(graph_.num_vertices()), 0);
    std::vector<int> ins(static_cast<std::size_t>(graph_.num_vertices()), 0);
    for (int e = 0; e < graph_.num_edges(); ++e) {
        ++outs[static_cast<std::size_t>(tail(e))];
        ++ins[static_cast<std::size_t>(head(e))];
    }
    for (int v = 0; v < graph_.num_vertices(); ++v) {
        if (graph_.is_boundary(v)) continue;
        if (graph_.color(v) == VertexColor::black && outs[static_cast<std::size_t>(v)] != 1)
            throw OrientationError("black vertex " + std::to_string(v) + " has " +
                                   std::to_string(outs[static_cast<std::size_t>(v)]) +
                                   " outgoing edges, wants 1");
        if (graph_.color(v) == VertexColor::white && ins[static_cast<std::size_t>(v)] != 1)
            throw OrientationError("white vertex " + std::to_string(v) + " has " +
                                   std::to_string(ins[static_cast<std::size_t>(v)]) +
                                   " incoming edges, wants 1");
    }
    std::vector<int> source_marks;
    for (int i = 1; i <= graph_.num_boundary(); ++i)
        if (outs[static_cast<std::size_t>(graph_.boundary_vertex(i))] == 1)
            source_marks.push_back(i);
    sources_ = IndexSubset(source_marks);
    acyclic_ = digraph_is_acyclic(graph_, dirs_);
}

int PerfectOrientation::tail(int e) const {
    const auto& [v, w] = graph_.edge(e);
    return dirs_[static_cast<std::size_t>(e)] > 0 ? v : w;
}

int PerfectOrientation::head(int e) const {
    const auto& [v, w] = graph_.edge(e);
    return dirs_[static_cast<std::size_t>(e)] > 0 ? w : v;
}

std::vector<int> PerfectOrientation::out_edges(int v) const {
    std::vector<int> out;
    for (int e : graph_.rotation(v))
        if (tail(e) == v) out.push_back(e);
    return out;
}

PerfectOrientation acyclic_orientation(const PlabicGraph& g, int budget) {
    const ReducedCheck rc = check_reduced_type(g);
    if (!rc.ok)
        throw OrientationError("graph is not reduced of the standard type: " + rc.diagnostics);
    const std::string want = canonical_encoding(g);
    const RectanglesChart seed = build_rectangles_graph(g.shape());
    const MoveClass mc = move_class_bfs(seed.graph, seed.orientation, budget);
    for (const MoveClassMember& m : mc.members)
        if (m.encoding == want) return PerfectOrientation(m.graph, m.orientation);
    throw OrientationError(
        "no move path known from the rectangles graph within budget " + std::to_string(budget));
}

std::vector<Flow> enumerate_flows(const PerfectOrientation& o, const IndexSubset& J) {
    if (!o.acyclic()) throw OrientationError("flow enumeration needs an acyclic orientation");
    const PlabicGraph& g = o.graph();
    const SinkSplit split = split_sinks(o, J);
    Flow base;
    for (int t : split.trivial) base.walks.push_back({t, t, {}});

    std::vector<Flow> out;
    std::vector<bool> used(static_cast<std::size_t>(g.num_vertices()), false);
    for (int t : split.trivial) used[static_cast<std::size_t>(g.boundary_vertex(t))] = true;
    std::vector<std::vector<int>> walk_edges(split.sources.size());

    // Depth-first over walks in pairing order, masking used vertices.
    auto emit = [&]() {
        Flow f = base;
        for (std::size_t p = 0; p < split.sources.size(); ++p)
            f.walks.push_back({split.sources[p], split.sinks[p], walk_edges[p]});
        out.push_back(std::move(f));
    };
    auto extend = [&](auto&& self, auto&& next_walk, std::size_t p, int v) -> void {
        const int target = g.boundary_vertex(split.sinks[p]);
        for (int e : o.out_edges(v)) {
            const int w = o.head(e);
            if (w == target) {
                walk_edges[p].push_back(e);
                next_walk(next_walk, p + 1);
                walk_edges[p].pop_back();
            } else if (!g.is_boundary(w) && !used[static_cast<std::size_t>(w)]) {
                used[static_cast<std::size_t>(w)] = true;
                walk_edges[p].push_back(e);
                self(self, next_walk, p, w);
                walk_edges[p].pop_back();
                used[static_cast<std::size_t>(w)] = false;
            }
        }
    };
    auto next_walk = [&](auto&& self, std::size_t p) -> void {
        if (p == split.sources.size()) {
            emit();
            return;
        }
        extend(extend, self, p, g.boundary_vertex(split.sources[p]));
    };
    next_walk(next_walk, 0);
    return out;
}

LaurentPoly flow_weight(const PerfectOrientation& o, const FaceLabeling& labeling,
                        const Flow& f) {
    const PlabicGraph& g = o.graph();
    const int n = g.num_boundary();
    LaurentPoly w = LaurentPoly::constant(1);
    for (const FlowWalk& walk : f.walks) {
        if (walk.edges.empty()) continue;
        std::vector<int> seeds;
        std::vector<bool> edge_walls(static_cast<std::size_t>(g.num_edges()), false);
        std::vector<bool> arc_walls(static_cast<std::size_t>(n), false);
        for (int e : walk.edges) {
            seeds.push_back(g.edge_dart(e, o.tail(e)));
            edge_walls[static_cast<std::size_t>(e)] = true;
        }
        for (int m = walk.sink; m != walk.source; m = m % n + 1)
            arc_walls[static_cast<std::size_t>(m - 1)] = true;
        for (int face : left_region(g, labeling.faces, seeds, edge_walls, arc_walls))
            w = w * LaurentPoly::variable(VarId::of(labeling.labels[static_cast<std::size_t>(face)]));
    }
    return w;
}

LaurentPoly plucker_polynomial(const PerfectOrientation& o, const IndexSubset& J) {
    const FaceLabeling labeling = face_labels(o.graph());
    LaurentPoly sum = LaurentPoly::zero();
    for (const Flow& f : enumerate_flows(o, J)) sum += flow_weight(o, labeling, f);
    Monomial inverse_product;
    for (const Partition& mu : labeling.chart) inverse_product[VarId::of(mu)] = -1;
    return substitute_monomial(sum, VarId::of(Partition()), inverse_product);
}

std::map<IndexSubset, LaurentPoly> all_plucker_polynomials(const PerfectOrientation& o) {
    std::map<IndexSubset, LaurentPoly> out;
    const GrassmannShape s = o.graph().shape();
    for (const IndexSubset& J : all_subsets(s.n, s.rows())) out.emplace(J, plucker_polynomial(o, J));
    return out;
}

Flow minimal_flow_rec(const GrassmannShape& shape, const IndexSubset& J) {
    const RectanglesChart chart = build_rectangles_graph(shape);
    const PlabicGraph& g = chart.graph;
    const PerfectOrientation o(g, chart.orientation);
    const SinkSplit split = split_sinks(o, J);
    const int rows = shape.rows();
    const int cols = shape.cols();
    const int n = shape.n;

    auto edge_between = [&](int u, int v) {
        for (int e : g.rotation(u))
            if (g.other_end(e, u) == v) return e;
        throw GraphError("expected a wiring-grid edge");
    };

    Flow f;
    for (int t : split.trivial) f.walks.push_back({t, t, {}});
    std::vector<bool> used(static_cast<std::size_t>(g.num_vertices()), false);
    for (std::size_t p = 0; p < split.sources.size(); ++p) {
        FlowWalk walk{split.sources[p], split.sinks[p], {}};
        const int exit_col = n + 1 - split.sinks[p];
        int row = split.sources[p];
        int col = cols;
        auto occupy = [&](int v) {
            if (used[static_cast<std::size_t>(v)])
                throw CombinatoricsError("minimal walks collided in the wiring grid");
            used[static_cast<std::size_t>(v)] = true;
        };
        auto step_to = [&](int from, int r, int c) {
            const int b = rectangles_black_vertex(shape, r, c);
            const int w = rectangles_white_vertex(shape, r, c);
            occupy(b);
            occupy(w);
            walk.edges.push_back(edge_between(from, b));
            walk.edges.push_back(edge_between(b, w));
            row = r;
            col = c;
            return w;
        };
        int at = step_to(g.boundary_vertex(walk.source), row, col);
        while (true) {
            if (col == exit_col && row == rows) {
                walk.edges.push_back(edge_between(at, g.boundary_vertex(walk.sink)));
                break;
            }
            const bool south_free =
                row < rows &&
                !used[static_cast<std::size_t>(rectangles_black_vertex(shape, row + 1, col))] &&
                !used[static_cast<std::size_t>(rectangles_white_vertex(shape, row + 1, col))];
            if (col == exit_col || south_free) {
                // Hug the southeast border: go south whenever allowed.
                at = step_to(at, row + 1, col);
            } else if (col > exit_col) {
                at = step_to(at, row, col - 1);
            } else {
                throw CombinatoricsError("minimal walk overshot its exit column");
            }
        }
        f.walks.push_back(std::move(walk));
    }
    return f;
}

LaurentPoly minimal_flow_weight_rec(const GrassmannShape& shape, const IndexSubset& J) {
    const RectanglesChart chart = build_rectangles_graph(shape);
    const PerfectOrientation o(chart.graph, chart.orientation);
    return flow_weight(o, face_labels(o.graph()), minimal_flow_rec(shape, J));
}

}  // namespace grassdual
