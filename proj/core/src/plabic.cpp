#include "grassdual/plabic.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <utility>

#include "grassdual/errors.hpp"

namespace grassdual {

namespace {

std::string vertex_name(int v) { return "vertex " + std::to_string(v); }

/// Out-darts at v in clockwise order. Boundary vertices get their two
/// virtual rim arcs around the single graph edge: the forward arc to the
/// clockwise neighbor first, the reversed arc from the counterclockwise
/// neighbor last.
std::vector<int> out_darts(const PlabicGraph& g, int v) {
    std::vector<int> out;
    const int bi = g.boundary_index(v);
    if (bi == 0) {
        out.reserve(g.rotation(v).size());
        for (int e : g.rotation(v)) out.push_back(g.edge_dart(e, v));
        return out;
    }
    const int j = bi - 1;
    const int n = g.num_boundary();
    const int base = 2 * g.num_edges();
    out.push_back(base + 2 * j);
    for (int e : g.rotation(v)) out.push_back(g.edge_dart(e, v));
    out.push_back(base + 2 * ((j + n - 1) % n) + 1);
    return out;
}

bool directed_graph_is_acyclic(int num_vertices, const std::vector<std::pair<int, int>>& arcs) {
    std::vector<std::vector<int>> succ(static_cast<std::size_t>(num_vertices));
    std::vector<int> indeg(static_cast<std::size_t>(num_vertices), 0);
    for (const auto& [a, b] : arcs) {
        succ[static_cast<std::size_t>(a)].push_back(b);
        ++indeg[static_cast<std::size_t>(b)];
    }
    std::deque<int> ready;
    for (int v = 0; v < num_vertices; ++v)
        if (indeg[static_cast<std::size_t>(v)] == 0) ready.push_back(v);
    int seen = 0;
    while (!ready.empty()) {
        int v = ready.front();
        ready.pop_front();
        ++seen;
        for (int w : succ[static_cast<std::size_t>(v)])
            if (--indeg[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
    return seen == num_vertices;
}

bool orientation_is_acyclic(const PlabicGraph& g, const EdgeDirections& dirs) {
    std::vector<std::pair<int, int>> arcs;
    arcs.reserve(static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [v, w] = g.edge(e);
        if (dirs[static_cast<std::size_t>(e)] > 0)
            arcs.emplace_back(v, w);
        else
            arcs.emplace_back(w, v);
    }
    return directed_graph_is_acyclic(g.num_vertices(), arcs);
}

/// Head vertex of edge e under the given directions.
int directed_head(const PlabicGraph& g, const EdgeDirections& dirs, int e) {
    return dirs[static_cast<std::size_t>(e)] > 0 ? g.edge(e).second : g.edge(e).first;
}

}  // namespace

// --- PlabicGraph ---------------------------------------------------------

PlabicGraph::PlabicGraph(GrassmannShape shape, std::vector<VertexColor> colors,
                         std::vector<int> boundary, std::vector<std::pair<int, int>> edges,
                         std::vector<std::vector<int>> rotations)
    : shape_(shape),
      colors_(std::move(colors)),
      boundary_(std::move(boundary)),
      edges_(std::move(edges)),
      rotations_(std::move(rotations)) {
    boundary_index_.assign(colors_.size(), 0);
    for (std::size_t i = 0; i < boundary_.size(); ++i) {
        int v = boundary_[i];
        if (v < 0 || v >= num_vertices()) throw GraphError("boundary vertex id out of range");
        if (boundary_index_[static_cast<std::size_t>(v)] != 0)
            throw GraphError("boundary vertex listed twice: " + vertex_name(v));
        boundary_index_[static_cast<std::size_t>(v)] = static_cast<int>(i) + 1;
    }
    validate();
}

int PlabicGraph::other_end(int e, int v) const {
    const auto& [a, b] = edges_[static_cast<std::size_t>(e)];
    if (a == v) return b;
    if (b == v) return a;
    throw GraphError("edge " + std::to_string(e) + " is not incident to " + vertex_name(v));
}

int PlabicGraph::dart_object(int d) const {
    return dart_is_arc(d) ? (d - 2 * num_edges()) / 2 : d / 2;
}

int PlabicGraph::dart_tail(int d) const {
    if (!dart_is_arc(d)) {
        const auto& [v, w] = edges_[static_cast<std::size_t>(d / 2)];
        return (d & 1) ? w : v;
    }
    const int j = dart_object(d);
    const int n = num_boundary();
    return (d & 1) ? boundary_[static_cast<std::size_t>((j + 1) % n)]
                   : boundary_[static_cast<std::size_t>(j)];
}

int PlabicGraph::dart_head(int d) const { return dart_tail(dart_reverse(d)); }

int PlabicGraph::edge_dart(int e, int tail_vertex) const {
    const auto& [v, w] = edges_[static_cast<std::size_t>(e)];
    if (v == tail_vertex) return 2 * e;
    if (w == tail_vertex) return 2 * e + 1;
    throw GraphError("edge " + std::to_string(e) + " is not incident to " +
                     vertex_name(tail_vertex));
}

void PlabicGraph::validate() const {
    const int n = shape_.n;
    if (static_cast<int>(boundary_.size()) != n)
        throw GraphError("expected " + std::to_string(n) + " boundary vertices, got " +
                         std::to_string(boundary_.size()));
    for (int v = 0; v < num_vertices(); ++v) {
        const bool listed = boundary_index_[static_cast<std::size_t>(v)] != 0;
        if (listed != (color(v) == VertexColor::boundary))
            throw GraphError("boundary list and color disagree at " + vertex_name(v));
    }
    std::vector<std::vector<int>> incident(colors_.size());
    for (int e = 0; e < num_edges(); ++e) {
        const auto& [v, w] = edges_[static_cast<std::size_t>(e)];
        if (v < 0 || v >= num_vertices() || w < 0 || w >= num_vertices())
            throw GraphError("edge endpoint out of range");
        if (v == w) throw GraphError("self-loop at " + vertex_name(v));
        incident[static_cast<std::size_t>(v)].push_back(e);
        incident[static_cast<std::size_t>(w)].push_back(e);
    }
    if (rotations_.size() != colors_.size())
        throw GraphError("rotation system must cover every vertex");
    for (int v = 0; v < num_vertices(); ++v) {
        auto sorted_rot = rotations_[static_cast<std::size_t>(v)];
        std::sort(sorted_rot.begin(), sorted_rot.end());
        auto& inc = incident[static_cast<std::size_t>(v)];
        std::sort(inc.begin(), inc.end());
        if (sorted_rot != inc)
            throw GraphError("rotation at " + vertex_name(v) +
                             " does not match its incident edges");
    }
    for (int i = 1; i <= n; ++i) {
        int v = boundary_vertex(i);
        if (degree(v) != 1)
            throw GraphError("boundary " + vertex_name(v) + " must have degree 1, has " +
                             std::to_string(degree(v)));
    }
    for (int v = 0; v < num_vertices(); ++v) {
        if (is_boundary(v)) continue;
        if (degree(v) == 0) throw GraphError("isolated internal " + vertex_name(v));
        if (degree(v) == 1) {
            int u = other_end(rotation(v)[0], v);
            if (!is_boundary(u))
                throw GraphError("internal leaf " + vertex_name(v) +
                                 " not attached to the boundary");
        }
    }
    // Connectivity including the rim: flood from b_1 across edges and arcs.
    std::vector<bool> seen(colors_.size(), false);
    std::deque<int> queue{boundary_[0]};
    seen[static_cast<std::size_t>(boundary_[0])] = true;
    int reached = 0;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        ++reached;
        auto push = [&](int u) {
            if (!seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = true;
                queue.push_back(u);
            }
        };
        for (int e : rotation(v)) push(other_end(e, v));
        if (int bi = boundary_index(v); bi != 0) {
            push(boundary_[static_cast<std::size_t>(bi % n)]);
            push(boundary_[static_cast<std::size_t>((bi - 2 + n) % n)]);
        }
    }
    if (reached != num_vertices())
        throw GraphError("graph is not connected to the boundary rim");
    // Euler condition for a disk: V - (E + n) + F = 2 with the rim arcs.
    FaceStructure fs = trace_faces(*this);
    const int euler = num_vertices() - (num_edges() + n) + fs.num_faces();
    if (euler != 2)
        throw GraphError("rotation system is not a disk embedding (Euler characteristic " +
                         std::to_string(euler) + ")");
}

// --- Faces ---------------------------------------------------------------

FaceStructure trace_faces(const PlabicGraph& g) {
    const int D = g.num_darts();
    std::vector<int> next(static_cast<std::size_t>(D), -1);
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<int> out = out_darts(g, v);
        const std::size_t m = out.size();
        for (std::size_t i = 0; i < m; ++i)
            next[static_cast<std::size_t>(PlabicGraph::dart_reverse(out[i]))] =
                out[(i + 1) % m];
    }
    FaceStructure fs;
    fs.face_of_dart.assign(static_cast<std::size_t>(D), -1);
    for (int d0 = 0; d0 < D; ++d0) {
        if (fs.face_of_dart[static_cast<std::size_t>(d0)] != -1) continue;
        const int f = fs.num_faces();
        fs.face_darts.emplace_back();
        int d = d0;
        do {
            fs.face_of_dart[static_cast<std::size_t>(d)] = f;
            fs.face_darts.back().push_back(d);
            d = next[static_cast<std::size_t>(d)];
            if (d < 0) throw GraphError("face tracing left the dart universe");
        } while (d != d0);
    }
    fs.exterior = fs.face_of_dart[static_cast<std::size_t>(2 * g.num_edges())];
    return fs;
}

// --- Trips ---------------------------------------------------------------

Trip trip(const PlabicGraph& g, int i) {
    if (i < 1 || i > g.num_boundary()) throw GraphError("trip index out of range");
    Trip t;
    t.start = i;
    const int b = g.boundary_vertex(i);
    int d = g.edge_dart(g.rotation(b)[0], b);
    t.darts.push_back(d);
    int guard = 2 * g.num_edges() + 2;
    while (true) {
        const int v = g.dart_head(d);
        if (g.is_boundary(v)) {
            t.end = g.boundary_index(v);
            return t;
        }
        const auto& rot = g.rotation(v);
        const int deg = static_cast<int>(rot.size());
        const int e_in = g.dart_object(d);
        int idx = -1;
        for (int s = 0; s < deg; ++s)
            if (rot[static_cast<std::size_t>(s)] == e_in) {
                idx = s;
                break;
            }
        const int step = g.color(v) == VertexColor::black ? deg - 1 : 1;
        const int e_out = rot[static_cast<std::size_t>((idx + step) % deg)];
        d = g.edge_dart(e_out, v);
        t.darts.push_back(d);
        if (--guard < 0) throw GraphError("trip from boundary vertex " + std::to_string(i) +
                                          " does not terminate");
    }
}

std::vector<int> trip_permutation(const PlabicGraph& g) {
    std::vector<int> pi;
    pi.reserve(static_cast<std::size_t>(g.num_boundary()));
    for (int i = 1; i <= g.num_boundary(); ++i) pi.push_back(trip(g, i).end);
    return pi;
}

// --- Flood fill ------------------------------------------------------------

std::vector<int> left_region(const PlabicGraph& g, const FaceStructure& fs,
                             const std::vector<int>& seed_darts,
                             const std::vector<bool>& edge_walls,
                             const std::vector<bool>& arc_walls) {
    std::vector<bool> in(static_cast<std::size_t>(fs.num_faces()), false);
    std::deque<int> queue;
    auto push = [&](int f) {
        if (!in[static_cast<std::size_t>(f)]) {
            in[static_cast<std::size_t>(f)] = true;
            queue.push_back(f);
        }
    };
    for (int d : seed_darts) push(fs.face_of_dart[static_cast<std::size_t>(d)]);
    while (!queue.empty()) {
        const int f = queue.front();
        queue.pop_front();
        for (int d : fs.face_darts[static_cast<std::size_t>(f)]) {
            const int obj = g.dart_object(d);
            const bool wall = g.dart_is_arc(d) ? arc_walls[static_cast<std::size_t>(obj)]
                                               : edge_walls[static_cast<std::size_t>(obj)];
            if (!wall)
                push(fs.face_of_dart[static_cast<std::size_t>(PlabicGraph::dart_reverse(d))]);
        }
    }
    std::vector<int> region;
    for (int f = 0; f < fs.num_faces(); ++f)
        if (in[static_cast<std::size_t>(f)] && f != fs.exterior) region.push_back(f);
    return region;
}

// --- Face labels -----------------------------------------------------------

int FaceLabeling::face_with(const Partition& p) const {
    for (int f = 0; f < faces.num_faces(); ++f)
        if (f != faces.exterior && labels[static_cast<std::size_t>(f)] == p) return f;
    return -1;
}

FaceLabeling face_labels(const PlabicGraph& g) {
    FaceLabeling out;
    out.faces = trace_faces(g);
    const int n = g.num_boundary();
    const int rows = g.shape().rows();
    std::vector<std::vector<int>> collected(static_cast<std::size_t>(out.faces.num_faces()));
    for (int i = 1; i <= n; ++i) {
        const Trip t = trip(g, i);
        std::vector<bool> edge_walls(static_cast<std::size_t>(g.num_edges()), false);
        std::vector<bool> arc_walls(static_cast<std::size_t>(n), false);
        for (int d : t.darts) edge_walls[static_cast<std::size_t>(g.dart_object(d))] = true;
        for (int m = t.end; m != i; m = m % n + 1) arc_walls[static_cast<std::size_t>(m - 1)] = true;
        for (int f : left_region(g, out.faces, t.darts, edge_walls, arc_walls))
            collected[static_cast<std::size_t>(f)].push_back(i);
    }
    out.subsets.resize(static_cast<std::size_t>(out.faces.num_faces()));
    out.labels.resize(static_cast<std::size_t>(out.faces.num_faces()));
    std::set<Partition> distinct;
    for (int f = 0; f < out.faces.num_faces(); ++f) {
        if (f == out.faces.exterior) continue;
        auto& got = collected[static_cast<std::size_t>(f)];
        std::sort(got.begin(), got.end());
        if (static_cast<int>(got.size()) != rows)
            throw LabelingError("face collected " + std::to_string(got.size()) +
                                " trip labels, expected " + std::to_string(rows));
        IndexSubset s(got);
        Partition p = partition_from_south(g.shape(), s);
        if (!distinct.insert(p).second)
            throw LabelingError("face label " + (p.empty() ? std::string("(empty)") : p.to_string()) +
                                " occurs twice");
        if (p.empty()) out.empty_face = f;
        out.subsets[static_cast<std::size_t>(f)] = std::move(s);
        out.labels[static_cast<std::size_t>(f)] = std::move(p);
    }
    if (out.empty_face < 0) throw LabelingError("no face carries the empty label");
    for (const Partition& p : distinct)
        if (!p.empty()) out.chart.push_back(p);
    return out;
}

// --- Reducedness -----------------------------------------------------------

ReducedCheck check_reduced_type(const PlabicGraph& g) {
    ReducedCheck c;
    std::string diag;
    const auto expected = standard_trip_permutation(g.shape());
    const auto pi = trip_permutation(g);
    c.trip_permutation_ok = pi == expected;
    if (!c.trip_permutation_ok) diag += "trip permutation differs from the standard one; ";
    const FaceStructure fs = trace_faces(g);
    const int want_faces = g.shape().boxes() + 1;
    c.face_count_ok = fs.num_disk_faces() == want_faces;
    if (!c.face_count_ok)
        diag += "disk face count " + std::to_string(fs.num_disk_faces()) + " differs from " +
                std::to_string(want_faces) + "; ";
    try {
        const PlabicGraph cf = canonical_form(g);
        bool parallel = false;
        std::set<std::pair<int, int>> seen;
        for (const auto& [v, w] : cf.edges())
            if (!seen.insert(std::minmax(v, w)).second) parallel = true;
        c.no_parallel_edges = !parallel;
        if (parallel) diag += "normalized form contains a parallel edge pair; ";
    } catch (const Error& ex) {
        c.no_parallel_edges = false;
        diag += std::string("normalization failed: ") + ex.what() + "; ";
    }
    c.ok = c.trip_permutation_ok && c.face_count_ok && c.no_parallel_edges;
    c.diagnostics = c.ok ? "reduced of the standard type" : diag;
    return c;
}

// --- Move primitives ---------------------------------------------------

namespace {

/// Mutable copy of a graph's data plus the orientation being transported.
struct GraphData {
    GrassmannShape shape;
    std::vector<VertexColor> colors;
    std::vector<int> boundary;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rotations;
    EdgeDirections dirs;  ///< empty when no orientation is being carried

    explicit GraphData(const PlabicGraph& g, const EdgeDirections* orient)
        : shape(g.shape()), boundary(g.boundary()), edges(g.edges()) {
        colors.reserve(static_cast<std::size_t>(g.num_vertices()));
        rotations.reserve(static_cast<std::size_t>(g.num_vertices()));
        for (int v = 0; v < g.num_vertices(); ++v) {
            colors.push_back(g.color(v));
            rotations.push_back(g.rotation(v));
        }
        if (orient) {
            if (static_cast<int>(orient->size()) != g.num_edges())
                throw OrientationError("orientation size does not match the edge count");
            dirs = *orient;
        }
    }

    bool carrying() const { return !dirs.empty(); }

    int tail_of(int e) const {
        return dirs[static_cast<std::size_t>(e)] > 0 ? edges[static_cast<std::size_t>(e)].first
                                                     : edges[static_cast<std::size_t>(e)].second;
    }

    void set_direction(int e, int tail) {
        dirs[static_cast<std::size_t>(e)] =
            edges[static_cast<std::size_t>(e)].first == tail ? +1 : -1;
    }

    void rename_endpoint(int e, int from, int to) {
        auto& [a, b] = edges[static_cast<std::size_t>(e)];
        // Direction tags are positional, so renaming an endpoint in place
        // keeps them valid.
        if (a == from)
            a = to;
        else if (b == from)
            b = to;
        else
            throw GraphError("edge endpoint rename mismatch");
    }

    /// Drop marked vertices/edges, compact ids, and build the graph.
    PlabicGraph build(const std::vector<bool>& dead_vertex, const std::vector<bool>& dead_edge,
                      EdgeDirections* orient_out) const {
        std::vector<int> vmap(colors.size(), -1), emap(edges.size(), -1);
        std::vector<VertexColor> new_colors;
        for (std::size_t v = 0; v < colors.size(); ++v)
            if (!dead_vertex[v]) {
                vmap[v] = static_cast<int>(new_colors.size());
                new_colors.push_back(colors[v]);
            }
        std::vector<std::pair<int, int>> new_edges;
        EdgeDirections new_dirs;
        for (std::size_t e = 0; e < edges.size(); ++e)
            if (!dead_edge[e]) {
                emap[e] = static_cast<int>(new_edges.size());
                new_edges.emplace_back(vmap[static_cast<std::size_t>(edges[e].first)],
                                       vmap[static_cast<std::size_t>(edges[e].second)]);
                if (carrying()) new_dirs.push_back(dirs[e]);
            }
        std::vector<int> new_boundary;
        new_boundary.reserve(boundary.size());
        for (int b : boundary) new_boundary.push_back(vmap[static_cast<std::size_t>(b)]);
        std::vector<std::vector<int>> new_rot;
        new_rot.reserve(new_colors.size());
        for (std::size_t v = 0; v < colors.size(); ++v) {
            if (dead_vertex[v]) continue;
            std::vector<int> r;
            r.reserve(rotations[v].size());
            for (int e : rotations[v])
                if (!dead_edge[static_cast<std::size_t>(e)]) r.push_back(emap[static_cast<std::size_t>(e)]);
            new_rot.push_back(std::move(r));
        }
        if (orient_out) {
            if (!carrying())
                throw OrientationError("orientation output requested without input orientation");
            *orient_out = std::move(new_dirs);
        }
        return PlabicGraph(shape, std::move(new_colors), std::move(new_boundary),
                           std::move(new_edges), std::move(new_rot));
    }

    PlabicGraph build(EdgeDirections* orient_out) const {
        return build(std::vector<bool>(colors.size(), false),
                     std::vector<bool>(edges.size(), false), orient_out);
    }
};

int index_in(const std::vector<int>& xs, int x, const char* what) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        if (xs[i] == x) return static_cast<int>(i);
    throw GraphError(std::string("expected to find ") + what);
}

}  // namespace

PlabicGraph contract_edge(const PlabicGraph& g, int e, const EdgeDirections* orient_in,
                          EdgeDirections* orient_out) {
    if (e < 0 || e >= g.num_edges()) throw MoveError("contraction edge out of range");
    const auto [u, v] = g.edge(e);
    if (g.is_boundary(u) || g.is_boundary(v))
        throw MoveError("cannot contract an edge touching the boundary");
    if (g.color(u) != g.color(v))
        throw MoveError("contraction requires equal colors at both endpoints");
    for (int f = 0; f < g.num_edges(); ++f) {
        if (f == e) continue;
        const auto [a, b] = g.edge(f);
        if (std::minmax(a, b) == std::minmax(u, v))
            throw MoveError("contraction would create a loop from a parallel edge");
    }
    GraphData d(g, orient_in);
    const auto& ru = g.rotation(u);
    const auto& rv = g.rotation(v);
    const int pu = index_in(ru, e, "contracted edge at its first endpoint");
    const int pv = index_in(rv, e, "contracted edge at its second endpoint");
    std::vector<int> merged;
    merged.reserve(ru.size() + rv.size() - 2);
    for (std::size_t s = 1; s < ru.size(); ++s)
        merged.push_back(ru[(static_cast<std::size_t>(pu) + s) % ru.size()]);
    for (std::size_t s = 1; s < rv.size(); ++s) {
        const int f = rv[(static_cast<std::size_t>(pv) + s) % rv.size()];
        d.rename_endpoint(f, v, u);
        merged.push_back(f);
    }
    d.rotations[static_cast<std::size_t>(u)] = std::move(merged);
    std::vector<bool> dead_v(d.colors.size(), false), dead_e(d.edges.size(), false);
    dead_v[static_cast<std::size_t>(v)] = true;
    dead_e[static_cast<std::size_t>(e)] = true;
    return d.build(dead_v, dead_e, orient_out);
}

PlabicGraph split_vertex(const PlabicGraph& g, int v, int slot, int count,
                         const EdgeDirections* orient_in, EdgeDirections* orient_out) {
    if (v < 0 || v >= g.num_vertices() || g.is_boundary(v))
        throw MoveError("split requires an internal vertex");
    const auto& rot = g.rotation(v);
    const int deg = static_cast<int>(rot.size());
    if (slot < 0 || slot >= deg || count < 1 || count >= deg)
        throw MoveError("split slot range invalid");
    GraphData d(g, orient_in);
    const int w = static_cast<int>(d.colors.size());
    d.colors.push_back(g.color(v));
    const int f = static_cast<int>(d.edges.size());
    d.edges.emplace_back(v, w);
    std::vector<int> moved, kept;
    for (int s = 0; s < count; ++s)
        moved.push_back(rot[static_cast<std::size_t>((slot + s) % deg)]);
    for (int s = count; s < deg; ++s)
        kept.push_back(rot[static_cast<std::size_t>((slot + s) % deg)]);
    if (d.carrying()) {
        d.dirs.push_back(0);
        // One distinguished port (the outgoing edge at black, the incoming
        // at white) sits on exactly one side of the split; the new edge
        // feeds the other side so both halves stay perfect.
        const bool black = g.color(v) == VertexColor::black;
        bool moved_has_port = false;
        for (int e : moved) {
            const bool leaves_v = d.tail_of(e) == v;
            if (black ? leaves_v : !leaves_v) moved_has_port = true;
        }
        if (black)
            d.set_direction(f, moved_has_port ? v : w);
        else
            d.set_direction(f, moved_has_port ? w : v);
    }
    for (int e : moved) d.rename_endpoint(e, v, w);
    std::vector<int> rot_v{f};
    rot_v.insert(rot_v.end(), kept.begin(), kept.end());
    std::vector<int> rot_w{f};
    rot_w.insert(rot_w.end(), moved.begin(), moved.end());
    d.rotations[static_cast<std::size_t>(v)] = std::move(rot_v);
    d.rotations.push_back(std::move(rot_w));
    return d.build(orient_out);
}

PlabicGraph insert_degree2(const PlabicGraph& g, int e, VertexColor c,
                           const EdgeDirections* orient_in, EdgeDirections* orient_out) {
    if (e < 0 || e >= g.num_edges()) throw MoveError("insertion edge out of range");
    if (c == VertexColor::boundary) throw MoveError("inserted vertex must be black or white");
    GraphData d(g, orient_in);
    const auto [a, b] = g.edge(e);
    const int m = static_cast<int>(d.colors.size());
    d.colors.push_back(c);
    // Reuse id e for the half toward `a`; the new id covers the half toward b.
    const int e2 = static_cast<int>(d.edges.size());
    d.edges[static_cast<std::size_t>(e)] = {a, m};
    d.edges.emplace_back(m, b);
    if (d.carrying()) {
        const bool toward_b = orient_in->at(static_cast<std::size_t>(e)) > 0;
        d.dirs.push_back(0);
        d.set_direction(e, toward_b ? a : m);
        d.set_direction(e2, toward_b ? m : b);
    }
    for (int& re : d.rotations[static_cast<std::size_t>(b)])
        if (re == e) re = e2;
    d.rotations.push_back({e, e2});
    return d.build(orient_out);
}

PlabicGraph remove_degree2(const PlabicGraph& g, int v, const EdgeDirections* orient_in,
                           EdgeDirections* orient_out) {
    if (v < 0 || v >= g.num_vertices() || g.is_boundary(v))
        throw MoveError("removal requires an internal vertex");
    if (g.degree(v) != 2) throw MoveError("removal requires a degree-2 vertex");
    const int e1 = g.rotation(v)[0];
    const int e2 = g.rotation(v)[1];
    const int a = g.other_end(e1, v);
    const int b = g.other_end(e2, v);
    if (a == b) throw MoveError("removing the vertex would create a loop");
    GraphData d(g, orient_in);
    if (d.carrying()) {
        const bool into_v1 = d.tail_of(e1) == a;
        const bool into_v2 = d.tail_of(e2) == b;
        if (into_v1 == into_v2)
            throw OrientationError("degree-2 vertex is not traversed by the orientation");
        d.edges[static_cast<std::size_t>(e1)] = {a, b};
        d.set_direction(e1, into_v1 ? a : b);
    } else {
        d.edges[static_cast<std::size_t>(e1)] = {a, b};
    }
    for (int& re : d.rotations[static_cast<std::size_t>(b)])
        if (re == e2) re = e1;
    std::vector<bool> dead_v(d.colors.size(), false), dead_e(d.edges.size(), false);
    dead_v[static_cast<std::size_t>(v)] = true;
    dead_e[static_cast<std::size_t>(e2)] = true;
    return d.build(dead_v, dead_e, orient_out);
}

PlabicGraph square_move(const PlabicGraph& g, const std::array<int, 4>& corners,
                        const EdgeDirections* orient_in, EdgeDirections* orient_out) {
    std::set<int> corner_set(corners.begin(), corners.end());
    if (corner_set.size() != 4) throw MoveError("square move needs four distinct vertices");
    for (int v : corners) {
        if (v < 0 || v >= g.num_vertices() || g.is_boundary(v))
            throw MoveError("square move corners must be internal vertices");
        if (g.degree(v) != 3) throw MoveError("square move corners must be trivalent");
    }
    // Locate the quadrilateral face bounded by exactly these corners.
    const FaceStructure fs = trace_faces(g);
    int face = -1;
    for (int f = 0; f < fs.num_faces(); ++f) {
        if (f == fs.exterior) continue;
        const auto& darts = fs.face_darts[static_cast<std::size_t>(f)];
        if (darts.size() != 4) continue;
        std::set<int> tails;
        bool arcs = false;
        for (int dd : darts) {
            if (g.dart_is_arc(dd)) arcs = true;
            tails.insert(g.dart_tail(dd));
        }
        if (!arcs && tails == corner_set) {
            face = f;
            break;
        }
    }
    if (face == -1) throw MoveError("the four vertices do not bound a quadrilateral face");
    const auto& darts = fs.face_darts[static_cast<std::size_t>(face)];
    std::array<int, 4> ring_vertex{}, ring_edge{};
    for (int t = 0; t < 4; ++t) {
        ring_vertex[static_cast<std::size_t>(t)] = g.dart_tail(darts[static_cast<std::size_t>(t)]);
        ring_edge[static_cast<std::size_t>(t)] = g.dart_object(darts[static_cast<std::size_t>(t)]);
    }
    for (int t = 0; t < 4; ++t)
        if (g.color(ring_vertex[static_cast<std::size_t>(t)]) ==
            g.color(ring_vertex[static_cast<std::size_t>((t + 1) % 4)]))
            throw MoveError("square move requires alternating colors around the face");

    GraphData d(g, orient_in);
    for (int v : corners) {
        auto& c = d.colors[static_cast<std::size_t>(v)];
        c = c == VertexColor::black ? VertexColor::white : VertexColor::black;
    }
    if (d.carrying()) {
        std::array<int, 4> leg{};
        std::array<bool, 4> leg_out{};
        for (int t = 0; t < 4; ++t) {
            const int v = ring_vertex[static_cast<std::size_t>(t)];
            leg[static_cast<std::size_t>(t)] = -1;
            for (int e : g.rotation(v))
                if (e != ring_edge[static_cast<std::size_t>(t)] &&
                    e != ring_edge[static_cast<std::size_t>((t + 3) % 4)])
                    leg[static_cast<std::size_t>(t)] = e;
            if (leg[static_cast<std::size_t>(t)] < 0)
                throw MoveError("square move corner is missing its third edge");
            leg_out[static_cast<std::size_t>(t)] =
                d.tail_of(leg[static_cast<std::size_t>(t)]) == v;
        }
        bool found = false;
        for (int mask = 0; mask < 16 && !found; ++mask) {
            // Bit t set: ring edge t runs ring_vertex[t] -> ring_vertex[t+1].
            auto edge_leaves = [&](int t, int v) {
                const bool forward = (mask >> t) & 1;
                return forward ? ring_vertex[static_cast<std::size_t>(t)] == v
                               : ring_vertex[static_cast<std::size_t>((t + 1) % 4)] == v;
            };
            bool perfect = true;
            for (int t = 0; t < 4 && perfect; ++t) {
                const int v = ring_vertex[static_cast<std::size_t>(t)];
                const int outs = (leg_out[static_cast<std::size_t>(t)] ? 1 : 0) +
                                 (edge_leaves(t, v) ? 1 : 0) +
                                 (edge_leaves((t + 3) % 4, v) ? 1 : 0);
                const bool black = d.colors[static_cast<std::size_t>(v)] == VertexColor::black;
                perfect = black ? outs == 1 : outs == 2;
            }
            if (!perfect) continue;
            EdgeDirections trial = d.dirs;
            for (int t = 0; t < 4; ++t) {
                const int e = ring_edge[static_cast<std::size_t>(t)];
                const int tail = (mask >> t) & 1
                                     ? ring_vertex[static_cast<std::size_t>(t)]
                                     : ring_vertex[static_cast<std::size_t>((t + 1) % 4)];
                trial[static_cast<std::size_t>(e)] =
                    d.edges[static_cast<std::size_t>(e)].first == tail ? +1 : -1;
            }
            if (orientation_is_acyclic(g, trial)) {
                d.dirs = std::move(trial);
                found = true;
            }
        }
        if (!found)
            throw OrientationError("no acyclic perfect redirection exists for the square move");
    }
    return d.build(orient_out);
}

PlabicGraph apply_move(const PlabicGraph& g, const MoveDescriptor& m,
                       const EdgeDirections* orient_in, EdgeDirections* orient_out) {
    switch (m.kind) {
        case MoveKind::square:
            return square_move(g, m.square, orient_in, orient_out);
        case MoveKind::contract:
            return contract_edge(g, m.edge, orient_in, orient_out);
        case MoveKind::uncontract:
            return split_vertex(g, m.vertex, m.slot, m.count, orient_in, orient_out);
        case MoveKind::insert:
            return insert_degree2(g, m.edge, m.color, orient_in, orient_out);
        case MoveKind::remove:
            return remove_degree2(g, m.vertex, orient_in, orient_out);
    }
    throw MoveError("unknown move kind");
}

PlabicGraph canonical_form(const PlabicGraph& g, const EdgeDirections* orient_in,
                           EdgeDirections* orient_out) {
    PlabicGraph cur = g;
    EdgeDirections dirs;
    const bool carry = orient_in != nullptr;
    if (carry) dirs = *orient_in;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int e = 0; e < cur.num_edges() && !changed; ++e) {
            const auto [u, v] = cur.edge(e);
            if (!cur.is_boundary(u) && !cur.is_boundary(v) && cur.color(u) == cur.color(v)) {
                EdgeDirections next;
                cur = contract_edge(cur, e, carry ? &dirs : nullptr, carry ? &next : nullptr);
                if (carry) dirs = std::move(next);
                changed = true;
            }
        }
        if (changed) continue;
        for (int v = 0; v < cur.num_vertices() && !changed; ++v) {
            if (!cur.is_boundary(v) && cur.degree(v) == 2) {
                EdgeDirections next;
                cur = remove_degree2(cur, v, carry ? &dirs : nullptr, carry ? &next : nullptr);
                if (carry) dirs = std::move(next);
                changed = true;
            }
        }
    }
    if (orient_out) {
        if (!carry) throw OrientationError("orientation output requested without input");
        *orient_out = std::move(dirs);
    }
    return cur;
}

std::string canonical_encoding(const PlabicGraph& g0) {
    const PlabicGraph g = canonical_form(g0);
    const int V = g.num_vertices();
    std::vector<int> id(static_cast<std::size_t>(V), -1);
    std::vector<int> arrival(static_cast<std::size_t>(V), -1);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(V));
    std::deque<int> queue;
    for (int i = 1; i <= g.num_boundary(); ++i) {
        const int b = g.boundary_vertex(i);
        id[static_cast<std::size_t>(b)] = static_cast<int>(order.size());
        arrival[static_cast<std::size_t>(b)] = g.rotation(b)[0];
        order.push_back(b);
        queue.push_back(b);
    }
    while (!queue.empty()) {
        const int v = queue.front();
        queue.pop_front();
        const auto& rot = g.rotation(v);
        const int deg = static_cast<int>(rot.size());
        const int start = index_in(rot, arrival[static_cast<std::size_t>(v)], "arrival edge");
        for (int s = 0; s < deg; ++s) {
            const int e = rot[static_cast<std::size_t>((start + s) % deg)];
            const int u = g.other_end(e, v);
            if (id[static_cast<std::size_t>(u)] < 0) {
                id[static_cast<std::size_t>(u)] = static_cast<int>(order.size());
                arrival[static_cast<std::size_t>(u)] = e;
                order.push_back(u);
                queue.push_back(u);
            }
        }
    }
    std::ostringstream enc;
    enc << "P(" << g.shape().k << "," << g.shape().n << ")";
    for (int v : order) {
        const char c = g.is_boundary(v) ? 'o'
                       : g.color(v) == VertexColor::black ? 'b'
                                                          : 'w';
        enc << ";" << c << "[";
        const auto& rot = g.rotation(v);
        const int deg = static_cast<int>(rot.size());
        const int start = index_in(rot, arrival[static_cast<std::size_t>(v)], "arrival edge");
        for (int s = 0; s < deg; ++s) {
            const int e = rot[static_cast<std::size_t>((start + s) % deg)];
            if (s) enc << ",";
            enc << id[static_cast<std::size_t>(g.other_end(e, v))];
        }
        enc << "]";
    }
    return enc.str();
}

// --- Generalized square move ---------------------------------------------

namespace {

bool face_is_mutable(const PlabicGraph& g, const FaceStructure& fs, int f) {
    if (f == fs.exterior) return false;
    const auto& darts = fs.face_darts[static_cast<std::size_t>(f)];
    if (darts.size() != 4) return false;
    std::set<int> tails;
    for (int d : darts) {
        if (g.dart_is_arc(d)) return false;
        const int v = g.dart_tail(d);
        if (g.is_boundary(v)) return false;
        tails.insert(v);
    }
    return tails.size() == 4;
}

}  // namespace

std::vector<Partition> mutable_faces(const PlabicGraph& g, const FaceLabeling& labeling) {
    std::vector<Partition> out;
    for (int f = 0; f < labeling.faces.num_faces(); ++f)
        if (face_is_mutable(g, labeling.faces, f))
            out.push_back(labeling.labels[static_cast<std::size_t>(f)]);
    std::sort(out.begin(), out.end());
    return out;
}

PlabicGraph mutate_face(const PlabicGraph& g0, const Partition& at, MutationStep* step,
                        const EdgeDirections* orient_in, EdgeDirections* orient_out) {
    const bool carry = orient_in != nullptr;
    EdgeDirections dirs;
    PlabicGraph g = canonical_form(g0, orient_in, carry ? &dirs : nullptr);
    FaceLabeling labeling = face_labels(g);
    const int f0 = labeling.face_with(at);
    if (f0 < 0) throw MoveError("no face carries the requested label");
    if (!face_is_mutable(g, labeling.faces, f0))
        throw MoveError("the requested face is not a quadrilateral with internal corners");

    MutationStep st;
    st.mu1 = at;
    const auto& darts0 = labeling.faces.face_darts[static_cast<std::size_t>(f0)];
    for (int t = 0; t < 4; ++t) {
        const int across = labeling.faces.face_of_dart[static_cast<std::size_t>(
            PlabicGraph::dart_reverse(darts0[static_cast<std::size_t>(t)]))];
        st.ring[static_cast<std::size_t>(t)] = labeling.labels[static_cast<std::size_t>(across)];
    }

    PlabicGraph cur = g;

    // Split high-degree corners until the face is bounded by trivalent
    // vertices; labels are unchanged by these contraction inverses.
    while (true) {
        const FaceLabeling lab = face_labels(cur);
        const int f = lab.face_with(at);
        if (f < 0) throw MoveError("face label vanished during preparation");
        const auto& darts = lab.faces.face_darts[static_cast<std::size_t>(f)];
        int corner = -1, enter = -1, leave = -1;
        for (std::size_t t = 0; t < darts.size(); ++t) {
            const int d_in = darts[t];
            const int d_out = darts[(t + 1) % darts.size()];
            const int v = cur.dart_head(d_in);
            if (cur.degree(v) > 3) {
                corner = v;
                enter = cur.dart_object(d_in);
                leave = cur.dart_object(d_out);
                break;
            }
        }
        if (corner < 0) break;
        const auto& rot = cur.rotation(corner);
        const int slot = index_in(rot, enter, "face edge in the corner rotation");
        if (rot[static_cast<std::size_t>((slot + 1) % rot.size())] != leave)
            throw MoveError("face edges are not adjacent in the corner rotation");
        EdgeDirections next;
        cur = split_vertex(cur, corner, slot, 2, carry ? &dirs : nullptr,
                           carry ? &next : nullptr);
        if (carry) dirs = std::move(next);
    }

    // Locate the prepared face one last time and flip it.
    {
        const FaceLabeling lab = face_labels(cur);
        const int f = lab.face_with(at);
        const auto& darts = lab.faces.face_darts[static_cast<std::size_t>(f)];
        std::array<int, 4> corners{};
        for (int t = 0; t < 4; ++t)
            corners[static_cast<std::size_t>(t)] = cur.dart_tail(darts[static_cast<std::size_t>(t)]);
        EdgeDirections next;
        cur = square_move(cur, corners, carry ? &dirs : nullptr, carry ? &next : nullptr);
        if (carry) dirs = std::move(next);
    }

    EdgeDirections canon_dirs;
    cur = canonical_form(cur, carry ? &dirs : nullptr, carry ? &canon_dirs : nullptr);

    const FaceLabeling lab2 = face_labels(cur);
    std::set<Partition> before(labeling.chart.begin(), labeling.chart.end());
    Partition new_label;
    bool found = false;
    for (const Partition& p : lab2.chart)
        if (!before.count(p)) {
            if (found) throw LabelingError("square move changed more than one face label");
            new_label = p;
            found = true;
        }
    if (!found) throw LabelingError("square move did not introduce a new face label");
    st.mu1p = new_label;
    if (step) *step = st;
    if (orient_out) {
        if (!carry) throw OrientationError("orientation output requested without input");
        *orient_out = std::move(canon_dirs);
    }
    return cur;
}

// --- Move classes ----------------------------------------------------------

MoveClass move_class_bfs(const PlabicGraph& seed, const EdgeDirections& seed_orientation,
                         int budget) {
    if (budget < 1) throw MoveError("budget must be positive");
    MoveClass mc;
    mc.complete = true;
    EdgeDirections dirs0;
    PlabicGraph g0 = canonical_form(seed, &seed_orientation, &dirs0);
    std::map<std::string, int> index;
    {
        std::string enc = canonical_encoding(g0);
        index[enc] = 0;
        mc.members.push_back({std::move(g0), std::move(dirs0), std::move(enc), {}});
    }
    for (std::size_t i = 0; i < mc.members.size(); ++i) {
        // The vector may grow during the loop; copy what we need up front.
        const PlabicGraph graph = mc.members[i].graph;
        const EdgeDirections orientation = mc.members[i].orientation;
        const std::vector<Partition> path = mc.members[i].move_path;
        const FaceLabeling labeling = face_labels(graph);
        for (const Partition& p : mutable_faces(graph, labeling)) {
            MutationStep st;
            EdgeDirections next_dirs;
            PlabicGraph h = mutate_face(graph, p, &st, &orientation, &next_dirs);
            std::string enc = canonical_encoding(h);
            int j;
            if (auto it = index.find(enc); it != index.end()) {
                j = it->second;
            } else if (static_cast<int>(mc.members.size()) >= budget) {
                mc.complete = false;
                continue;
            } else {
                j = static_cast<int>(mc.members.size());
                index[enc] = j;
                std::vector<Partition> next_path = path;
                next_path.push_back(p);
                mc.members.push_back(
                    {std::move(h), std::move(next_dirs), std::move(enc), std::move(next_path)});
            }
            mc.edges.push_back({static_cast<int>(i), j, st});
        }
    }
    return mc;
}

MoveClass move_class_walk(const PlabicGraph& seed, const EdgeDirections& seed_orientation,
                          int want, int max_steps, std::uint64_t rng_seed) {
    if (want < 1) throw MoveError("requested member count must be positive");
    MoveClass mc;
    mc.complete = false;  // a walk never certifies exhaustion
    EdgeDirections dirs0;
    PlabicGraph g0 = canonical_form(seed, &seed_orientation, &dirs0);
    std::map<std::string, int> index;
    {
        std::string enc = canonical_encoding(g0);
        index[enc] = 0;
        mc.members.push_back({std::move(g0), std::move(dirs0), std::move(enc), {}});
    }
    std::mt19937_64 rng(rng_seed);
    int cur = 0;
    for (int s = 0; s < max_steps && static_cast<int>(mc.members.size()) < want; ++s) {
        const PlabicGraph graph = mc.members[static_cast<std::size_t>(cur)].graph;
        const EdgeDirections orientation = mc.members[static_cast<std::size_t>(cur)].orientation;
        const std::vector<Partition> path = mc.members[static_cast<std::size_t>(cur)].move_path;
        const FaceLabeling labeling = face_labels(graph);
        const std::vector<Partition> faces = mutable_faces(graph, labeling);
        if (faces.empty()) break;
        const Partition& p = faces[static_cast<std::size_t>(rng() % faces.size())];
        MutationStep st;
        EdgeDirections next_dirs;
        PlabicGraph h = mutate_face(graph, p, &st, &orientation, &next_dirs);
        std::string enc = canonical_encoding(h);
        int j;
        if (auto it = index.find(enc); it != index.end()) {
            j = it->second;
        } else {
            j = static_cast<int>(mc.members.size());
            index[enc] = j;
            std::vector<Partition> next_path = path;
            next_path.push_back(p);
            mc.members.push_back(
                {std::move(h), std::move(next_dirs), std::move(enc), std::move(next_path)});
        }
        mc.edges.push_back({cur, j, st});
        cur = j;
    }
    return mc;
}

// --- The rectangles graph ---------------------------------------------------

int rectangles_black_vertex(const GrassmannShape& shape, int i, int j) {
    if (i < 1 || i > shape.rows() || j < 1 || j > shape.cols())
        throw GraphError("crossing position out of the wiring grid");
    return shape.n + 2 * ((i - 1) * shape.cols() + (j - 1));
}

int rectangles_white_vertex(const GrassmannShape& shape, int i, int j) {
    return rectangles_black_vertex(shape, i, j) + 1;
}

RectanglesChart build_rectangles_graph(const GrassmannShape& shape) {
    const int rows = shape.rows();
    const int cols = shape.cols();
    const int n = shape.n;
    std::vector<VertexColor> colors(static_cast<std::size_t>(n), VertexColor::boundary);
    std::vector<int> boundary(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) boundary[static_cast<std::size_t>(i)] = i;
    auto black = [&](int i, int j) { return rectangles_black_vertex(shape, i, j); };
    auto white = [&](int i, int j) { return rectangles_white_vertex(shape, i, j); };
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            colors.push_back(VertexColor::black);
            colors.push_back(VertexColor::white);
        }
    std::vector<std::pair<int, int>> edges;
    EdgeDirections dirs;
    auto add_edge = [&](int tail, int head) {
        edges.emplace_back(tail, head);
        dirs.push_back(+1);
        return static_cast<int>(edges.size()) - 1;
    };
    // partner(i,j): black -> white inside the crossing.
    // east(i,j): from the eastern neighbor (or the rim) into black.
    // north(i,j), i >= 2: from the white above into black.
    std::vector<int> partner(static_cast<std::size_t>(rows * cols));
    std::vector<int> east(static_cast<std::size_t>(rows * cols));
    std::vector<int> north(static_cast<std::size_t>(rows * cols), -1);
    std::vector<int> south_rim(static_cast<std::size_t>(cols));
    auto at = [&](int i, int j) { return static_cast<std::size_t>((i - 1) * cols + (j - 1)); };
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            partner[at(i, j)] = add_edge(black(i, j), white(i, j));
            east[at(i, j)] =
                j == cols ? add_edge(i - 1, black(i, j)) : add_edge(white(i, j + 1), black(i, j));
            if (i >= 2) north[at(i, j)] = add_edge(white(i - 1, j), black(i, j));
        }
    for (int j = 1; j <= cols; ++j)
        south_rim[static_cast<std::size_t>(j - 1)] = add_edge(white(rows, j), n - j);
    std::vector<std::vector<int>> rot(colors.size());
    for (int i = 1; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            auto& rb = rot[static_cast<std::size_t>(black(i, j))];
            rb.push_back(east[at(i, j)]);
            rb.push_back(partner[at(i, j)]);
            if (i >= 2) rb.push_back(north[at(i, j)]);
            auto& rw = rot[static_cast<std::size_t>(white(i, j))];
            rw.push_back(partner[at(i, j)]);
            rw.push_back(i == rows ? south_rim[static_cast<std::size_t>(j - 1)]
                                   : north[at(i + 1, j)]);
            if (j >= 2) rw.push_back(east[at(i, j - 1)]);
        }
    for (int i = 1; i <= rows; ++i) rot[static_cast<std::size_t>(i - 1)] = {east[at(i, cols)]};
    for (int j = 1; j <= cols; ++j)
        rot[static_cast<std::size_t>(n - j)] = {south_rim[static_cast<std::size_t>(j - 1)]};
    PlabicGraph g(shape, std::move(colors), std::move(boundary), std::move(edges),
                  std::move(rot));
    return RectanglesChart{std::move(g), std::move(dirs)};
}

}  // namespace grassdual
