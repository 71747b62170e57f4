#include "grassdual/io.hpp"

#include <json.hpp>
#include <sstream>

namespace grassdual {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string bracketed(const Partition& p) { return "[" + p.to_string() + "]"; }

std::string color_name(VertexColor c) {
    switch (c) {
        case VertexColor::black: return "black";
        case VertexColor::white: return "white";
        case VertexColor::boundary: return "boundary";
    }
    return "?";
}

std::string var_name(const VarId& v, char family) {
    if (v.is_q) return "q";
    return std::string(1, family) + bracketed(v.label);
}

/// The single edge incident to each rim vertex, in clockwise boundary order.
std::vector<int> boundary_edge_ids(const PlabicGraph& g) {
    std::vector<int> ids;
    for (int i = 1; i <= g.num_boundary(); ++i)
        ids.push_back(g.rotation(g.boundary_vertex(i)).front());
    return ids;
}

ordered_json graph_object(const PlabicGraph& g) {
    ordered_json j;
    j["shape"] = {{"k", g.shape().k}, {"n", g.shape().n}};
    ordered_json verts = ordered_json::array();
    for (int v = 0; v < g.num_vertices(); ++v)
        verts.push_back({{"id", v}, {"color", color_name(g.color(v))}});
    j["vertices"] = std::move(verts);
    j["boundary"] = boundary_edge_ids(g);
    j["boundary_edges"] = boundary_edge_ids(g);
    ordered_json edges = ordered_json::array();
    for (const auto& [v, w] : g.edges()) edges.push_back({v, w});
    j["edges"] = std::move(edges);
    ordered_json rot = ordered_json::object();
    for (int v = 0; v < g.num_vertices(); ++v) rot[std::to_string(v)] = g.rotation(v);
    j["rotation"] = std::move(rot);
    return j;
}

ordered_json condition_object(const Inequality& iq) {
    ordered_json c;
    c["const"] = to_string(iq.constant);
    ordered_json coeffs = ordered_json::array();
    for (const Rat& x : iq.coeffs) coeffs.push_back(to_string(x));
    c["coeffs"] = std::move(coeffs);
    return c;
}

void append_condition_line(std::string& out, const char* kind, const Inequality& iq) {
    out += kind;
    out += ' ' + to_string(iq.constant) + " |";
    for (const Rat& c : iq.coeffs) out += ' ' + to_string(c);
    out += '\n';
}

std::string dot_body(const PlabicGraph& g, const PerfectOrientation* o,
                     const FaceLabeling* labels) {
    std::ostringstream out;
    const char* link = o ? " -> " : " -- ";
    out << (o ? "digraph" : "graph") << " plabic {\n";
    out << "  node [shape=circle, style=filled, label=\"\", width=0.22];\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        out << "  n" << v;
        if (g.is_boundary(v))
            out << " [shape=plaintext, style=solid, label=\"" << g.boundary_index(v) << "\"]";
        else if (g.color(v) == VertexColor::black)
            out << " [fillcolor=black]";
        else
            out << " [fillcolor=white]";
        out << ";\n";
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        int v = g.edge(e).first, w = g.edge(e).second;
        if (o) {
            v = o->tail(e);
            w = o->head(e);
        }
        out << "  n" << v << link << "n" << w << ";\n";
    }
    if (labels) {
        out << "  label=\"faces:";
        for (int f = 0; f < labels->faces.num_faces(); ++f) {
            if (f == labels->faces.exterior) continue;
            out << " f" << f << "=" << bracketed(labels->labels[static_cast<std::size_t>(f)]);
        }
        out << "\";\n  labelloc=\"b\";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace

std::string graph_json(const PlabicGraph& g) { return graph_object(g).dump(2) + "\n"; }

std::string orientation_json(const PerfectOrientation& o) {
    ordered_json j = graph_object(o.graph());
    ordered_json dirs = ordered_json::object();
    for (int e = 0; e < o.graph().num_edges(); ++e)
        dirs[std::to_string(e)] = o.tail(e) == o.graph().edge(e).first ? 1 : -1;
    j["directions"] = std::move(dirs);
    j["sources"] = o.sources().elems();
    return j.dump(2) + "\n";
}

std::string laurent_json(const LaurentPoly& f, char family) {
    ordered_json terms = ordered_json::array();
    for (const auto& [mono, coeff] : f.terms()) {
        ordered_json t;
        t["coeff"] = to_string(coeff);
        ordered_json exps = ordered_json::object();
        for (const auto& [var, e] : mono) exps[var_name(var, family)] = e;
        t["exponents"] = std::move(exps);
        terms.push_back(std::move(t));
    }
    return terms.dump(2) + "\n";
}

std::string polytope_json(const VPolytope& v, const HPolytope& h) {
    const std::vector<Partition>& coords = v.coords.empty() ? h.coords : v.coords;
    ordered_json j;
    ordered_json names = ordered_json::array();
    for (const Partition& p : coords) names.push_back(bracketed(p));
    j["coords"] = std::move(names);
    ordered_json verts = ordered_json::array();
    for (const RatVec& pt : v.vertices) {
        ordered_json row = ordered_json::array();
        for (const Rat& x : pt) row.push_back(to_string(x));
        verts.push_back(std::move(row));
    }
    j["vertices"] = std::move(verts);
    ordered_json ineqs = ordered_json::array();
    for (const Inequality& iq : h.inequalities) ineqs.push_back(condition_object(iq));
    j["inequalities"] = std::move(ineqs);
    ordered_json eqs = ordered_json::array();
    for (const Inequality& eq : h.equations) eqs.push_back(condition_object(eq));
    j["equations"] = std::move(eqs);
    return j.dump(2) + "\n";
}

std::string polytope_text(const VPolytope& v, const HPolytope& h) {
    const std::vector<Partition>& coords = v.coords.empty() ? h.coords : v.coords;
    std::string out = "coords";
    for (const Partition& p : coords) out += ' ' + bracketed(p);
    out += '\n';
    for (const RatVec& pt : v.vertices) {
        out += "vertex";
        for (const Rat& x : pt) out += ' ' + to_string(x);
        out += '\n';
    }
    for (const Inequality& iq : h.inequalities) append_condition_line(out, "inequality", iq);
    for (const Inequality& eq : h.equations) append_condition_line(out, "equation", eq);
    return out;
}

std::string valuation_table_tsv(const std::map<IndexSubset, IntVec>& table,
                                const std::vector<Partition>& coords) {
    std::string out = "subset";
    for (const Partition& p : coords) out += '\t' + bracketed(p);
    out += '\n';
    for (const auto& [subset, row] : table) {
        out += subset.to_string();
        for (const Int& x : row) out += '\t' + to_string(x);
        out += '\n';
    }
    return out;
}

std::string valuation_table_json(const std::map<IndexSubset, IntVec>& table,
                                 const std::vector<Partition>& coords) {
    ordered_json j;
    ordered_json names = ordered_json::array();
    for (const Partition& p : coords) names.push_back(bracketed(p));
    j["coords"] = std::move(names);
    ordered_json rows = ordered_json::object();
    for (const auto& [subset, row] : table) {
        ordered_json vals = ordered_json::array();
        for (const Int& x : row) vals.push_back(to_string(x));
        rows[subset.to_string()] = std::move(vals);
    }
    j["rows"] = std::move(rows);
    return j.dump(2) + "\n";
}

std::string superpotential_text(const LaurentPoly& w, char family) {
    std::string out;
    for (const auto& [mono, coeff] : w.terms()) {
        if (!out.empty()) out += coeff > 0 ? " + " : " - ";
        else if (coeff < 0) out += "-";
        const Int mag = coeff > 0 ? coeff : Int(-coeff);
        std::string num, den;
        for (const auto& [var, e] : mono) {
            std::string& side = e > 0 ? num : den;
            if (!side.empty()) side += '*';
            side += var_name(var, family);
            const int mag_e = e > 0 ? e : -e;
            if (mag_e != 1) side += '^' + std::to_string(mag_e);
        }
        std::string term;
        if (mag != 1 || num.empty()) term = to_string(mag);
        if (!num.empty()) term += (term.empty() ? "" : "*") + num;
        if (!den.empty()) term += '/' + (den.find('*') != std::string::npos ? '(' + den + ')' : den);
        out += term;
    }
    if (out.empty()) out = "0";
    return out;
}

std::string flows_json(const PerfectOrientation& o, const std::vector<Flow>& flows) {
    ordered_json all = ordered_json::array();
    for (const Flow& flow : flows) {
        ordered_json walks = ordered_json::array();
        for (const FlowWalk& w : flow.walks) {
            ordered_json jw;
            jw["source"] = w.source;
            jw["sink"] = w.sink;
            std::vector<int> vertices{o.graph().boundary_vertex(w.source)};
            for (int e : w.edges) vertices.push_back(o.graph().other_end(e, vertices.back()));
            jw["vertices"] = vertices;
            walks.push_back(std::move(jw));
        }
        all.push_back(std::move(walks));
    }
    return all.dump(2) + "\n";
}

std::string graph_dot(const PlabicGraph& g, const FaceLabeling* labels) {
    return dot_body(g, nullptr, labels);
}

std::string orientation_dot(const PerfectOrientation& o, const FaceLabeling* labels) {
    return dot_body(o.graph(), &o, labels);
}

}  // namespace grassdual
