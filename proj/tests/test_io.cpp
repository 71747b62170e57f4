#include <doctest.h>

#include <algorithm>
#include <json.hpp>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "grassdual/amodel.hpp"
#include "grassdual/bmodel.hpp"
#include "grassdual/io.hpp"
#include "grassdual/network.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"
#include "grassdual/polytope.hpp"

using namespace grassdual;
using nlohmann::json;

namespace {

RectanglesChart chart24() { return build_rectangles_graph(GrassmannShape(2, 4)); }
RectanglesChart chart35() { return build_rectangles_graph(GrassmannShape(3, 5)); }

}  // namespace

TEST_CASE("graph JSON carries the full rotation system") {
    const PlabicGraph g = chart24().graph;
    const std::string text = graph_json(g);
    const json j = json::parse(text);

    CHECK(j["shape"]["k"] == 2);
    CHECK(j["shape"]["n"] == 4);
    REQUIRE(j["vertices"].size() == static_cast<std::size_t>(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) {
        CHECK(j["vertices"][static_cast<std::size_t>(v)]["id"] == v);
        const std::string color = j["vertices"][static_cast<std::size_t>(v)]["color"];
        CHECK((color == "black" || color == "white" || color == "boundary"));
        CHECK((color == "boundary") == g.is_boundary(v));
    }

    // Both boundary keys carry the same clockwise edge list, one edge per
    // rim vertex, and each listed edge is the one incident to that vertex.
    REQUIRE(j["boundary"].size() == static_cast<std::size_t>(g.num_boundary()));
    CHECK(j["boundary"] == j["boundary_edges"]);
    for (int i = 1; i <= g.num_boundary(); ++i) {
        const int e = j["boundary"][static_cast<std::size_t>(i - 1)];
        const auto [v, w] = g.edge(e);
        CHECK((v == g.boundary_vertex(i) || w == g.boundary_vertex(i)));
    }

    REQUIRE(j["edges"].size() == static_cast<std::size_t>(g.num_edges()));
    for (int e = 0; e < g.num_edges(); ++e) {
        CHECK(j["edges"][static_cast<std::size_t>(e)][0] == g.edge(e).first);
        CHECK(j["edges"][static_cast<std::size_t>(e)][1] == g.edge(e).second);
    }
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& rot = j["rotation"][std::to_string(v)];
        REQUIRE(rot.size() == g.rotation(v).size());
        for (std::size_t i = 0; i < rot.size(); ++i) CHECK(rot[i] == g.rotation(v)[i]);
    }
}

TEST_CASE("graph JSON rebuilds the same graph") {
    const PlabicGraph g = chart35().graph;
    const json j = json::parse(graph_json(g));

    std::vector<VertexColor> colors;
    for (const auto& v : j["vertices"]) {
        const std::string c = v["color"];
        colors.push_back(c == "black" ? VertexColor::black
                                      : c == "white" ? VertexColor::white : VertexColor::boundary);
    }
    // Clockwise rim vertices: each boundary edge's endpoint of boundary color.
    std::vector<int> boundary;
    for (const auto& je : j["boundary"]) {
        const int e = je;
        const int v = j["edges"][static_cast<std::size_t>(e)][0];
        const int w = j["edges"][static_cast<std::size_t>(e)][1];
        boundary.push_back(colors[static_cast<std::size_t>(v)] == VertexColor::boundary ? v : w);
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j["edges"]) edges.emplace_back(e[0], e[1]);
    std::vector<std::vector<int>> rotations(colors.size());
    for (std::size_t v = 0; v < colors.size(); ++v)
        rotations[v] = j["rotation"][std::to_string(v)].get<std::vector<int>>();

    const PlabicGraph rebuilt(GrassmannShape(j["shape"]["k"], j["shape"]["n"]), colors, boundary,
                              edges, rotations);
    CHECK(canonical_encoding(rebuilt) == canonical_encoding(g));
}

TEST_CASE("orientation JSON records directions and sources") {
    const RectanglesChart rc = chart24();
    const PerfectOrientation o(rc.graph, rc.orientation);
    const json j = json::parse(orientation_json(o));

    REQUIRE(j["directions"].size() == static_cast<std::size_t>(rc.graph.num_edges()));
    for (int e = 0; e < rc.graph.num_edges(); ++e) {
        const int d = j["directions"][std::to_string(e)];
        REQUIRE((d == 1 || d == -1));
        const int tail = d == 1 ? rc.graph.edge(e).first : rc.graph.edge(e).second;
        CHECK(tail == o.tail(e));
    }
    CHECK(j["sources"].get<std::vector<int>>() == o.sources().elems());
    // The orientation document embeds the full graph document.
    CHECK(j["rotation"] == json::parse(graph_json(rc.graph))["rotation"]);
}

TEST_CASE("laurent JSON lists terms with string coefficients") {
    const LaurentPoly f = parse_laurent("3*x[2,1]*x[1]^-2 - q^2*x[1] + 7");
    const json j = json::parse(laurent_json(f));
    REQUIRE(j.size() == 3);

    std::set<std::pair<std::string, std::map<std::string, int>>> seen;
    for (const auto& term : j) {
        std::map<std::string, int> exps;
        for (const auto& [name, e] : term["exponents"].items()) exps[name] = e;
        seen.insert({term["coeff"], exps});
    }
    const std::set<std::pair<std::string, std::map<std::string, int>>> want = {
        {"3", {{"x[2,1]", 1}, {"x[1]", -2}}},
        {"-1", {{"q", 2}, {"x[1]", 1}}},
        {"7", {}},
    };
    CHECK(seen == want);

    // Family renames partition variables but never q.
    const json jp = json::parse(laurent_json(f, 'p'));
    bool found_q = false, found_p = false;
    for (const auto& term : jp)
        for (const auto& [name, e] : term["exponents"].items()) {
            (void)e;
            found_q |= name == "q";
            found_p |= name == "p[2,1]";
            CHECK(name.find("x[") == std::string::npos);
        }
    CHECK(found_q);
    CHECK(found_p);
}

TEST_CASE("polytope JSON and text round the same data") {
    const std::vector<RatVec> square = {{Rat(0), Rat(0)}, {Rat(1), Rat(0)},
                                        {Rat(0), Rat(1)}, {Rat(1), Rat(1)}};
    const auto [v, h] = hull(square);
    const json j = json::parse(polytope_json(v, h));
    CHECK(j["coords"].empty());
    REQUIRE(j["vertices"].size() == 4);
    CHECK(j["vertices"][0].size() == 2);
    CHECK(j["inequalities"].size() == 4);
    CHECK(j["equations"].empty());
    for (const auto& iq : j["inequalities"]) {
        CHECK(iq["coeffs"].size() == 2);
        CHECK(iq["const"].is_string());
    }

    const std::string text = polytope_text(v, h);
    CHECK(text.find("coords\n") == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 1 + 4 + 4);
    CHECK(text.find("vertex 0 0\n") != std::string::npos);
    CHECK(text.find("vertex 1 1\n") != std::string::npos);
    CHECK(text.find("inequality ") != std::string::npos);

    // Labeled polytopes carry partition names.
    const std::vector<Partition> coords = {Partition({2, 2}), Partition({1, 1}), Partition({2}),
                                           Partition({1})};
    const auto [lv, lh] = hull({{Rat(0), Rat(0), Rat(0), Rat(0)}, {Rat(1), Rat(1), Rat(0), Rat(1)}},
                               coords);
    const json lj = json::parse(polytope_json(lv, lh));
    CHECK(lj["coords"] == json::array({"[2,2]", "[1,1]", "[2]", "[1]"}));
    CHECK(polytope_text(lv, lh).find("coords [2,2] [1,1] [2] [1]\n") == 0);
}

TEST_CASE("valuation table exports keyed by subset in column order") {
    const RectanglesChart rc = chart35();
    const PerfectOrientation o(rc.graph, rc.orientation);
    const FaceLabeling fl = face_labels(rc.graph);
    const auto table = valuation_table(o, fl);
    const std::vector<Partition> coords = chart_coordinates(fl);

    const std::string tsv = valuation_table_tsv(table, coords);
    std::vector<std::string> lines;
    for (std::size_t pos = 0; pos < tsv.size();) {
        const std::size_t next = tsv.find('\n', pos);
        lines.push_back(tsv.substr(pos, next - pos));
        pos = next + 1;
    }
    REQUIRE(lines.size() == 11);
    CHECK(lines[0] == "subset\t[3,3]\t[2,2]\t[1,1]\t[3]\t[2]\t[1]");
    CHECK(lines[1] == "{1,2}\t0\t0\t0\t0\t0\t0");
    CHECK(lines[8] == "{3,4}\t2\t1\t0\t1\t1\t0");
    CHECK(lines[10] == "{4,5}\t2\t2\t1\t1\t1\t1");

    const json j = json::parse(valuation_table_json(table, coords));
    CHECK(j["coords"].size() == 6);
    REQUIRE(j["rows"].size() == 10);
    CHECK(j["rows"]["{2,4}"] == json::array({"1", "1", "0", "1", "0", "0"}));
}

TEST_CASE("superpotential text renders terms in division form") {
    const LaurentPoly w = superpotential_rectangles(GrassmannShape(3, 5));
    const std::string text = superpotential_text(w);
    CHECK(std::count(text.begin(), text.end(), '+') == 8);
    CHECK(text.find("/q") == std::string::npos);  // q multiplies a numerator here
    CHECK(text.find("*q/p[3,3]") != std::string::npos);
    CHECK(text.find("p[2,2]/(p[1]*p[1,1])") != std::string::npos);

    // Summing the re-parsed fractions recovers the polynomial exactly.
    LaurentPoly sum;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t next = text.find(" + ", pos);
        if (next == std::string::npos) next = text.size();
        const std::string term = text.substr(pos, next - pos);
        const std::size_t slash = term.find('/');
        if (slash == std::string::npos) {
            sum = sum + parse_laurent(term);
        } else {
            std::string den = term.substr(slash + 1);
            if (den.front() == '(') den = den.substr(1, den.size() - 2);
            sum = sum + exact_div(parse_laurent(term.substr(0, slash)), parse_laurent(den));
        }
        pos = next + 3;
    }
    CHECK(sum == w);

    // Signs, coefficients, and powers all render.
    const std::string mixed = superpotential_text(parse_laurent("-2*x[1]^2*x[2]^-3 + x[1]^-1 - 1"));
    CHECK(mixed.find("-1") != std::string::npos);
    CHECK(mixed.find("1/p[1]") != std::string::npos);
    CHECK(mixed.find("2*p[1]^2/p[2]^3") != std::string::npos);
    CHECK(superpotential_text(LaurentPoly{}) == "0");
}

TEST_CASE("flow walks export as connected vertex paths") {
    const RectanglesChart rc = chart24();
    const PerfectOrientation o(rc.graph, rc.orientation);
    const IndexSubset j34(std::vector<int>{3, 4});
    const auto flows = enumerate_flows(o, j34);
    REQUIRE(!flows.empty());

    const json j = json::parse(flows_json(o, flows));
    REQUIRE(j.size() == flows.size());
    for (const auto& flow : j)
        for (const auto& walk : flow) {
            const std::vector<int> vertices = walk["vertices"].get<std::vector<int>>();
            REQUIRE(!vertices.empty());
            CHECK(vertices.front() == rc.graph.boundary_vertex(walk["source"]));
            CHECK(vertices.back() == rc.graph.boundary_vertex(walk["sink"]));
        }
}

TEST_CASE("DOT exports are deterministic and annotated") {
    const RectanglesChart rc = chart24();
    const FaceLabeling fl = face_labels(rc.graph);

    const std::string dot = graph_dot(rc.graph, &fl);
    CHECK(dot == graph_dot(rc.graph, &fl));
    CHECK(dot.rfind("graph plabic {", 0) == 0);
    CHECK(dot.find(" -- ") != std::string::npos);
    CHECK(dot.find(" -> ") == std::string::npos);
    CHECK(dot.find("fillcolor=black") != std::string::npos);
    CHECK(dot.find("fillcolor=white") != std::string::npos);
    CHECK(dot.find("label=\"1\"") != std::string::npos);
    CHECK(dot.find("label=\"4\"") != std::string::npos);
    CHECK(dot.find("faces:") != std::string::npos);
    CHECK(dot.find("=[]") != std::string::npos);      // the empty-label face
    CHECK(dot.find("=[2,2]") != std::string::npos);   // the full rectangle
    CHECK(dot.find("faces:") > dot.find(" -- "));     // annotation after edges

    // Unlabeled export drops the annotation block.
    CHECK(graph_dot(rc.graph).find("faces:") == std::string::npos);

    const PerfectOrientation o(rc.graph, rc.orientation);
    const std::string ddot = orientation_dot(o, &fl);
    CHECK(ddot.rfind("digraph plabic {", 0) == 0);
    CHECK(ddot.find(" -> ") != std::string::npos);
    CHECK(ddot.find(" -- ") == std::string::npos);
    // Each directed edge follows the orientation's tail -> head.
    for (int e = 0; e < rc.graph.num_edges(); ++e) {
        const std::string arrow =
            "n" + std::to_string(o.tail(e)) + " -> n" + std::to_string(o.head(e));
        CHECK(ddot.find(arrow) != std::string::npos);
    }
}
