/// Command-line driver: verification runs, chart polynomials, move-class
/// listings, superpotentials, and file exports.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "grassdual/amodel.hpp"
#include "grassdual/bmodel.hpp"
#include "grassdual/errors.hpp"
#include "grassdual/io.hpp"
#include "grassdual/laurent.hpp"
#include "grassdual/network.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"
#include "grassdual/polytope.hpp"
#include "grassdual/verify.hpp"

namespace {

using namespace grassdual;

/// The chart reached from the rectangles graph along a move path given as
/// partition strings ("2,1"; the empty partition is written "0").
struct ChartState {
    PlabicGraph graph;
    EdgeDirections orientation;
    std::vector<Partition> path;
};

ChartState replay_path(const GrassmannShape& shape, const std::vector<std::string>& path_texts) {
    const RectanglesChart seed = build_rectangles_graph(shape);
    ChartState state{seed.graph, seed.orientation, {}};
    for (const std::string& text : path_texts) {
        const Partition at = Partition::parse(text);
        EdgeDirections next;
        state.graph = mutate_face(state.graph, at, nullptr, &state.orientation, &next);
        state.orientation = std::move(next);
        state.path.push_back(at);
    }
    return state;
}

std::vector<int> parse_degrees(const std::string& text) {
    std::vector<int> rs;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        const int r = std::stoi(token);
        if (r < 1) throw CLI::ValidationError("--r", "degrees must be >= 1");
        rs.push_back(r);
    }
    if (rs.empty()) throw CLI::ValidationError("--r", "no degrees given");
    return rs;
}

void write_out(const std::string& out_path, const std::string& text) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw Error("cannot open output file " + out_path);
    file << text;
}

[[noreturn]] void reject_format(const std::string& target, const std::string& format) {
    throw Error("unknown format '" + format + "' for target '" + target + "'");
}

std::string render_export(const std::string& target, const std::string& format,
                          const GrassmannShape& shape, const ChartState& state, int r) {
    const PerfectOrientation orientation(state.graph, state.orientation);
    if (target == "graph") {
        const FaceLabeling labeling = face_labels(state.graph);
        if (format == "json") return graph_json(state.graph);
        if (format == "dot") return graph_dot(state.graph, &labeling);
        reject_format(target, format);
    }
    if (target == "orientation") {
        const FaceLabeling labeling = face_labels(state.graph);
        if (format == "json") return orientation_json(orientation);
        if (format == "dot") return orientation_dot(orientation, &labeling);
        reject_format(target, format);
    }
    if (target == "polytope") {
        const FaceLabeling labeling = face_labels(state.graph);
        const auto [v, h] = no_polytope(orientation, labeling, r);
        if (format == "json") return polytope_json(v, h);
        if (format == "text") return polytope_text(v, h);
        reject_format(target, format);
    }
    if (target == "superpotential") {
        const LaurentPoly w = superpotential_in_cluster(shape, state.path);
        if (format == "text") return superpotential_text(w) + "\n";
        if (format == "json") return laurent_json(w, 'p');
        reject_format(target, format);
    }
    throw Error("unknown export target '" + target + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact polytope duality for Grassmannian charts: network-chart "
                 "Newton-Okounkov polytopes vs tropicalized-superpotential polytopes."};
    app.require_subcommand(1);

    int k = 0, n = 0, budget = 10000, r = 1;
    std::string degrees = "1", format, out_path, subset_text;
    std::vector<std::string> path_texts;
    int exit_code = 0;

    const auto add_shape = [&](CLI::App* cmd) {
        cmd->add_option("--k", k, "columns of the label rectangle")->required();
        cmd->add_option("--n", n, "marked boundary points")->required();
    };

    CLI::App* verify = app.add_subcommand(
        "verify", "enumerate the move class and check polytope equality at every degree");
    add_shape(verify);
    verify->add_option("--r", degrees, "comma-separated degrees (default 1)");
    verify->add_option("--budget", budget, "move-class search budget (default 10000)");
    verify->callback([&] {
        const VerificationReport report =
            cmd_verify(GrassmannShape(k, n), parse_degrees(degrees), budget);
        std::cout << report_text(report);
        exit_code = report.ok() ? 0 : 1;
    });

    CLI::App* exp = app.add_subcommand("export", "write a computed object to a file or stdout");
    std::string target;
    exp->add_option("target", target, "graph|orientation|polytope|superpotential")->required();
    add_shape(exp);
    exp->add_option("--path", path_texts, "move path from the rectangles graph, one face label "
                                          "per entry (e.g. --path 1 --path 2,1)");
    exp->add_option("--r", r, "polytope degree (default 1)");
    exp->add_option("--format", format, "json|dot|text (default json)");
    exp->add_option("--out", out_path, "output file (default stdout)");
    exp->callback([&] {
        if (format.empty()) format = "json";
        const GrassmannShape shape(k, n);
        write_out(out_path, render_export(target, format, shape, replay_path(shape, path_texts), r));
    });

    CLI::App* chart = app.add_subcommand(
        "chart", "print the flow polynomial of one Pluecker coordinate in a chart");
    add_shape(chart);
    chart->add_option("--path", path_texts, "move path from the rectangles graph");
    chart->add_option("--j", subset_text, "boundary subset, e.g. 2,4")->required();
    chart->add_option("--out", out_path, "output file (default stdout)");
    chart->callback([&] {
        const GrassmannShape shape(k, n);
        const ChartState state = replay_path(shape, path_texts);
        std::vector<int> elems;
        std::string token;
        std::istringstream in(subset_text);
        while (std::getline(in, token, ',')) elems.push_back(std::stoi(token));
        const PerfectOrientation orientation(state.graph, state.orientation);
        const LaurentPoly p = plucker_polynomial(orientation, IndexSubset(elems));
        write_out(out_path, to_string_factored(p) + "\n");
    });

    CLI::App* moves = app.add_subcommand(
        "moves", "list the move class of the rectangles graph (breadth-first)");
    add_shape(moves);
    moves->add_option("--budget", budget, "search budget (default 10000)");
    moves->add_option("--out", out_path, "output file (default stdout)");
    moves->callback([&] {
        const RectanglesChart seed = build_rectangles_graph(GrassmannShape(k, n));
        const MoveClass mc = move_class_bfs(seed.graph, seed.orientation, budget);
        std::ostringstream text;
        text << mc.members.size() << " graphs, " << (mc.complete ? "complete" : "budget exhausted")
             << ", " << mc.edges.size() << " exchange edges\n";
        for (std::size_t i = 0; i < mc.members.size(); ++i) {
            text << "graph " << i << " path=[";
            const auto& path = mc.members[i].move_path;
            for (std::size_t j = 0; j < path.size(); ++j)
                text << (j ? "; " : "") << (path[j].empty() ? "0" : path[j].to_string());
            text << "] id=" << mc.members[i].encoding << "\n";
        }
        write_out(out_path, text.str());
    });

    CLI::App* super = app.add_subcommand(
        "superpotential", "print the superpotential in the chart reached by a move path");
    add_shape(super);
    super->add_option("--path", path_texts, "move path from the rectangles graph");
    super->add_option("--format", format, "text|json (default text)");
    super->add_option("--out", out_path, "output file (default stdout)");
    super->callback([&] {
        if (format.empty()) format = "text";
        std::vector<Partition> path;
        for (const std::string& text : path_texts) path.push_back(Partition::parse(text));
        const LaurentPoly w = superpotential_in_cluster(GrassmannShape(k, n), path);
        if (format == "text")
            write_out(out_path, superpotential_text(w) + "\n");
        else if (format == "json")
            write_out(out_path, laurent_json(w, 'p'));
        else
            reject_format("superpotential", format);
    });

    try {
        CLI11_PARSE(app, argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}
