#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grassdual/partitions.hpp"

namespace grassdual {

enum class VertexColor : std::uint8_t { black, white, boundary };

/// Direction tag per edge: +1 means first endpoint -> second endpoint,
/// -1 the reverse. Used to transport orientations through moves; the
/// network module wraps this in PerfectOrientation with its invariants.
using EdgeDirections = std::vector<signed char>;

/// Planar bicolored graph embedded in a disk, represented by a rotation
/// system. Boundary vertices b_1..b_n sit on the disk rim in clockwise
/// order and each has exactly one incident edge. Immutable value type:
/// moves return new graphs.
class PlabicGraph {
public:
    /// `colors` has one entry per vertex (ids 0..V-1); entries for the ids
    /// in `boundary` must be VertexColor::boundary. `boundary` lists the n
    /// rim vertices clockwise. `rotations[v]` lists the incident edge ids
    /// clockwise around v. Validates shape, degrees, rotation consistency,
    /// connectivity and the disk (Euler) condition; throws GraphError.
    PlabicGraph(GrassmannShape shape, std::vector<VertexColor> colors, std::vector<int> boundary,
                std::vector<std::pair<int, int>> edges, std::vector<std::vector<int>> rotations);

    const GrassmannShape& shape() const { return shape_; }
    int num_vertices() const { return static_cast<int>(colors_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    int num_boundary() const { return static_cast<int>(boundary_.size()); }

    VertexColor color(int v) const { return colors_[static_cast<std::size_t>(v)]; }
    bool is_boundary(int v) const { return color(v) == VertexColor::boundary; }
    /// Vertex id of b_i (1-based boundary index).
    int boundary_vertex(int i) const { return boundary_[static_cast<std::size_t>(i - 1)]; }
    const std::vector<int>& boundary() const { return boundary_; }
    /// Inverse of boundary_vertex: 1-based index, or 0 for internal vertices.
    int boundary_index(int v) const { return boundary_index_[static_cast<std::size_t>(v)]; }

    const std::pair<int, int>& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    int other_end(int e, int v) const;
    const std::vector<int>& rotation(int v) const { return rotations_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(rotation(v).size()); }

    // --- Darts -------------------------------------------------------------
    // Edge e owns darts 2e (first -> second) and 2e+1 (second -> first).
    // Virtual boundary arc j (0-based, joining rim slots j and j+1 mod n)
    // owns darts 2E+2j (clockwise: b_{j+1} -> b_{j+2}) and 2E+2j+1.
    int num_darts() const { return 2 * num_edges() + 2 * num_boundary(); }
    bool dart_is_arc(int d) const { return d >= 2 * num_edges(); }
    /// Edge id for edge darts, 0-based arc id for arc darts.
    int dart_object(int d) const;
    int dart_tail(int d) const;
    int dart_head(int d) const;
    static int dart_reverse(int d) { return d ^ 1; }
    int edge_dart(int e, int tail_vertex) const;

private:
    GrassmannShape shape_;
    std::vector<VertexColor> colors_;
    std::vector<int> boundary_;
    std::vector<int> boundary_index_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> rotations_;

    void validate() const;
};

/// Faces of the disk embedding, traced from the rotation system with the n
/// virtual rim arcs closing the disk. Every dart lies on exactly one face,
/// the face to its left. The orbit of the forward arc darts is the single
/// exterior face; all other faces are disk faces.
struct FaceStructure {
    std::vector<std::vector<int>> face_darts;  ///< traversal order per face
    std::vector<int> face_of_dart;             ///< dart id -> face id
    int exterior = -1;

    int num_faces() const { return static_cast<int>(face_darts.size()); }
    int num_disk_faces() const { return num_faces() - 1; }
};

FaceStructure trace_faces(const PlabicGraph& g);

/// One trip: starts at boundary vertex b_start, turns maximally at each
/// internal vertex (one way at black, the other at white), ends at b_end.
struct Trip {
    int start = 0;  ///< 1-based boundary index
    int end = 0;    ///< 1-based boundary index
    std::vector<int> darts;
};

Trip trip(const PlabicGraph& g, int i);

/// Images pi(1..n) collected from all n trips; result[i-1] = trip(i).end.
std::vector<int> trip_permutation(const PlabicGraph& g);

/// Dual-graph flood fill: start from the faces to the left of `seed_darts`,
/// spread across every edge e with edge_walls[e] false and every arc j with
/// arc_walls[j] false, and return the flooded disk faces (the exterior may
/// be traversed but is dropped from the result).
std::vector<int> left_region(const PlabicGraph& g, const FaceStructure& fs,
                             const std::vector<int>& seed_darts,
                             const std::vector<bool>& edge_walls,
                             const std::vector<bool>& arc_walls);

/// Face labels: face f receives boundary index i when f lies to the left of
/// trip i (closed up along the rim from b_{pi(i)} clockwise back to b_i).
/// Each disk face collects an (n-k)-subset, equivalently a partition in the
/// (n-k) x k rectangle; the empty partition occurs on exactly one face.
struct FaceLabeling {
    FaceStructure faces;
    std::vector<IndexSubset> subsets;  ///< per face id; exterior left empty
    std::vector<Partition> labels;     ///< per face id; exterior left empty
    std::vector<Partition> chart;      ///< the N nonempty labels, sorted
    int empty_face = -1;

    /// Face id carrying label p, or -1.
    int face_with(const Partition& p) const;
};

FaceLabeling face_labels(const PlabicGraph& g);

/// Reducedness test for type pi_{k,n}: trip permutation must equal
/// (n-k+1, ..., n, 1, ..., n-k), the disk face count must be k(n-k)+1, and
/// the fully M2/M3-normalized form must not contain a parallel pair of
/// edges (the bigon reduction pattern). Diagnostics name the failed check.
struct ReducedCheck {
    bool ok = false;
    bool trip_permutation_ok = false;
    bool face_count_ok = false;
    bool no_parallel_edges = false;
    std::string diagnostics;
};

ReducedCheck check_reduced_type(const PlabicGraph& g);

// --- Local moves -------------------------------------------------------
// Each primitive returns a freshly built graph with compact ids. When
// `orient_in` is given it must have one entry per input edge; the
// transported orientation for the output graph is written to *orient_out.

/// Square move: flip the colors of four trivalent internal vertices that
/// bound a quadrilateral face with alternating colors. Edges are unchanged;
/// the transported orientation redirects the four square edges (legs keep
/// their directions) so the result is again perfect and acyclic.
PlabicGraph square_move(const PlabicGraph& g, const std::array<int, 4>& corners,
                        const EdgeDirections* orient_in = nullptr,
                        EdgeDirections* orient_out = nullptr);

/// Contract an edge joining two internal vertices of the same color into a
/// single vertex (merging rotations at the shared edge).
PlabicGraph contract_edge(const PlabicGraph& g, int e, const EdgeDirections* orient_in = nullptr,
                          EdgeDirections* orient_out = nullptr);

/// Inverse of contract_edge: split vertex v, moving `count` consecutive
/// rotation slots starting at `slot` onto a new vertex of the same color
/// joined to v by a new edge.
PlabicGraph split_vertex(const PlabicGraph& g, int v, int slot, int count,
                         const EdgeDirections* orient_in = nullptr,
                         EdgeDirections* orient_out = nullptr);

/// Insert a new internal vertex of the given color in the middle of edge e.
PlabicGraph insert_degree2(const PlabicGraph& g, int e, VertexColor c,
                           const EdgeDirections* orient_in = nullptr,
                           EdgeDirections* orient_out = nullptr);

/// Remove an internal degree-2 vertex, gluing its two edges together.
PlabicGraph remove_degree2(const PlabicGraph& g, int v,
                           const EdgeDirections* orient_in = nullptr,
                           EdgeDirections* orient_out = nullptr);

enum class MoveKind : std::uint8_t { square, contract, uncontract, insert, remove };

struct MoveDescriptor {
    MoveKind kind = MoveKind::square;
    std::array<int, 4> square{-1, -1, -1, -1};  ///< corners for MoveKind::square
    int edge = -1;                              ///< contract / insert location
    int vertex = -1;                            ///< uncontract / remove location
    int slot = 0;                               ///< uncontract: first moved slot
    int count = 0;                              ///< uncontract: moved slot count
    VertexColor color = VertexColor::black;     ///< insert: new vertex color
};

PlabicGraph apply_move(const PlabicGraph& g, const MoveDescriptor& m,
                       const EdgeDirections* orient_in = nullptr,
                       EdgeDirections* orient_out = nullptr);

/// Fully normalized representative of the M2/M3 equivalence class: every
/// edge between equal-colored internal vertices contracted and every
/// internal degree-2 vertex removed. Throws MoveError if normalization
/// would create a self-loop (non-reduced input).
PlabicGraph canonical_form(const PlabicGraph& g, const EdgeDirections* orient_in = nullptr,
                           EdgeDirections* orient_out = nullptr);

/// Canonical traversal string of canonical_form(g), anchored at b_1 and
/// independent of vertex/edge ids: equal encodings iff the graphs are
/// related by M2/M3 moves alone.
std::string canonical_encoding(const PlabicGraph& g);

/// Exchange data of one generalized square move: the mutated face label
/// before (mu1) and after (mu1p), and the labels of the four neighboring
/// faces in cyclic order; (ring[0], ring[2]) and (ring[1], ring[3]) are the
/// opposite pairs of the exchange relation.
struct MutationStep {
    Partition mu1;
    Partition mu1p;
    std::array<Partition, 4> ring;
};

/// Faces of a canonical graph where a generalized square move applies:
/// quadrilateral disk faces with four distinct internal corners.
std::vector<Partition> mutable_faces(const PlabicGraph& g, const FaceLabeling& labeling);

/// Generalized square move at the face labeled `at` of a canonical graph:
/// corners of degree > 3 are split (M2) so the face becomes trivalent, the
/// strict square move flips the four colors, and the result is normalized
/// back to canonical form. The exchange data is written to *step.
PlabicGraph mutate_face(const PlabicGraph& g, const Partition& at, MutationStep* step = nullptr,
                        const EdgeDirections* orient_in = nullptr,
                        EdgeDirections* orient_out = nullptr);

/// One member of a move-equivalence class: canonical graph, transported
/// acyclic perfect orientation (sources {1..n-k}), and a move path from the
/// seed (the sequence of face labels that were mutated).
struct MoveClassMember {
    PlabicGraph graph;
    EdgeDirections orientation;
    std::string encoding;
    std::vector<Partition> move_path;
};

/// Edge of the exchange graph: mutating members[from] at step.mu1 yields
/// members[to] (whose label set replaces mu1 by step.mu1p).
struct ExchangeEdge {
    int from = -1;
    int to = -1;
    MutationStep step;
};

struct MoveClass {
    std::vector<MoveClassMember> members;  ///< members[0] is the seed
    std::vector<ExchangeEdge> edges;
    bool complete = false;  ///< true when BFS closed below the budget
};

/// Breadth-first exploration of the move class of `seed` under generalized
/// square moves on canonical forms. Every reachable canonical graph is
/// returned with a shortest move path and transported orientation;
/// `complete` is false when the budget was exhausted first.
MoveClass move_class_bfs(const PlabicGraph& seed, const EdgeDirections& seed_orientation,
                         int budget);

/// Random mutation walk from `seed` collecting distinct canonical graphs
/// until `want` members are found or `max_steps` mutations were tried.
/// Deterministic for a fixed rng_seed. Exchange edges record every step.
MoveClass move_class_walk(const PlabicGraph& seed, const EdgeDirections& seed_orientation,
                          int want, int max_steps, std::uint64_t rng_seed);

/// The grid-pattern graph whose faces are labeled by all rectangles, with
/// its standard acyclic perfect orientation (boundary sources 1..n-k).
struct RectanglesChart {
    PlabicGraph graph;
    EdgeDirections orientation;
};

RectanglesChart build_rectangles_graph(const GrassmannShape& shape);

/// Vertex ids used by build_rectangles_graph: boundary marks occupy ids
/// 0..n-1, and the wire crossing in row i (1-based, from the top) and
/// column j (1-based, from the west) owns the black/white pair below.
int rectangles_black_vertex(const GrassmannShape& shape, int i, int j);
int rectangles_white_vertex(const GrassmannShape& shape, int i, int j);

}  // namespace grassdual
