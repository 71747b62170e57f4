#include "grassdual/verify.hpp"

#include <chrono>
#include <cstdint>
#include <sstream>

#include "grassdual/amodel.hpp"
#include "grassdual/bmodel.hpp"
#include "grassdual/errors.hpp"
#include "grassdual/network.hpp"
#include "grassdual/polytope.hpp"

namespace grassdual {

namespace {

/// Short stable id for a canonical encoding (FNV-1a, hex).
std::string short_id(const std::string& encoding) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : encoding) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf, 8);
}

}  // namespace

bool VerificationReport::ok() const {
    if (!complete) return false;
    for (const MemberResult& r : results)
        if (!r.ok()) return false;
    return true;
}

MemberResult verify_member(const MoveClassMember& member, int r, const Int& oracle) {
    MemberResult out;
    out.encoding = member.encoding;
    out.path_length = member.move_path.size();
    out.r = r;
    try {
        const FaceLabeling labeling = face_labels(member.graph);
        const PerfectOrientation orientation(member.graph, member.orientation);
        const auto [no_v, no_h] = no_polytope(orientation, labeling, r);
        const HPolytope q_h = q_polytope(member.graph.shape(), member.move_path, r);
        const VPolytope q_v = vertices_of(q_h);

        out.no_vertex_count = no_v.vertices.size();
        out.q_facet_count = q_h.inequalities.size();
        out.lattice_count = lattice_points(no_h).size();

        const EqualityCertificate cert = equal_polytopes(no_v, no_h, q_v, q_h);
        out.equal = cert.equal;
        out.counts_match = Int(static_cast<long>(out.lattice_count)) == oracle;
        if (!cert.equal) {
            out.certificate = cert.detail;
        } else if (!out.counts_match) {
            out.certificate = "lattice-point count " + std::to_string(out.lattice_count) +
                              " differs from the expected count " + to_string(oracle);
        }
    } catch (const Error& e) {
        out.equal = false;
        out.counts_match = false;
        out.certificate = std::string("computation failed: ") + e.what();
    }
    return out;
}

VerificationReport cmd_verify(const GrassmannShape& shape, const std::vector<int>& r_values,
                              int budget) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.shape = shape;
    report.r_values = r_values;

    for (int r : r_values) report.oracle_counts.push_back(ssyt_count(shape, r));

    const RectanglesChart seed = build_rectangles_graph(shape);
    const MoveClass move_class = move_class_bfs(seed.graph, seed.orientation, budget);
    if (!move_class.complete)
        throw MoveError("move-class budget of " + std::to_string(budget) +
                        " graphs exhausted before the class closed");
    report.complete = move_class.complete;
    report.member_count = move_class.members.size();

    for (const MoveClassMember& member : move_class.members)
        for (std::size_t i = 0; i < r_values.size(); ++i)
            report.results.push_back(verify_member(member, r_values[i], report.oracle_counts[i]));

    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::string report_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "verify Gr(" << report.shape.k << "," << report.shape.n << ")\n";
    out << "degrees:";
    for (int r : report.r_values) out << ' ' << r;
    out << "\nmove class: " << report.member_count << " graphs, "
        << (report.complete ? "complete" : "budget exhausted") << "\n";
    out << "oracle counts:";
    for (std::size_t i = 0; i < report.r_values.size(); ++i)
        out << (i ? ", " : " ") << "r=" << report.r_values[i] << " -> "
            << to_string(report.oracle_counts[i]);
    out << "\n";

    std::size_t passed = 0;
    const std::size_t per_member = report.r_values.size();
    for (std::size_t i = 0; i < report.results.size(); ++i) {
        const MemberResult& r = report.results[i];
        if (per_member && i % per_member == 0)
            out << "graph " << i / per_member << " id=" << short_id(r.encoding)
                << " path=" << r.path_length << "\n";
        out << "  r=" << r.r << ": vertices=" << r.no_vertex_count
            << " facets=" << r.q_facet_count << " lattice=" << r.lattice_count
            << " equal=" << (r.equal ? "yes" : "NO")
            << " counts=" << (r.counts_match ? "yes" : "NO") << "\n";
        if (!r.certificate.empty()) out << "  certificate: " << r.certificate << "\n";
        if (r.ok()) ++passed;
    }
    out << "checks passed: " << passed << "/" << report.results.size() << "\n";
    out << "status: " << (report.ok() ? "PASS" : "FAIL") << "\n";
    std::ostringstream time;
    time.setf(std::ios::fixed);
    time.precision(2);
    time << report.seconds;
    out << "time: " << time.str() << "s\n";
    return out.str();
}

}  // namespace grassdual
