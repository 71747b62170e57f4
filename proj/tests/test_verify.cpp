#include <doctest.h>

#include <string>
#include <vector>

#include "grassdual/errors.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"
#include "grassdual/verify.hpp"

using namespace grassdual;

namespace {

std::string strip_time_line(const std::string& text) {
    const std::size_t pos = text.rfind("time:");
    REQUIRE(pos != std::string::npos);
    return text.substr(0, pos);
}

}  // namespace

TEST_CASE("smallest shape verifies as a single-graph class") {
    const GrassmannShape shape(2, 3);
    const VerificationReport report = cmd_verify(shape, {1});
    CHECK(report.complete);
    CHECK(report.member_count == 1);
    REQUIRE(report.results.size() == 1);
    CHECK(report.ok());

    const MemberResult& r = report.results[0];
    CHECK(r.r == 1);
    CHECK(r.path_length == 0);
    CHECK(r.equal);
    CHECK(r.counts_match);
    CHECK(r.certificate.empty());
    CHECK(Int(static_cast<long>(r.lattice_count)) == ssyt_count(shape, 1));
    CHECK(r.lattice_count == 3);
}

TEST_CASE("two-graph class verifies at degrees one through three") {
    const GrassmannShape shape(2, 4);
    const VerificationReport report = cmd_verify(shape, {1, 2, 3});
    CHECK(report.complete);
    CHECK(report.member_count == 2);
    REQUIRE(report.results.size() == 6);
    CHECK(report.ok());

    REQUIRE(report.oracle_counts.size() == 3);
    CHECK(report.oracle_counts[0] == 6);
    CHECK(report.oracle_counts[1] == 20);
    CHECK(report.oracle_counts[2] == 50);
    for (const MemberResult& r : report.results) {
        CHECK(r.ok());
        CHECK(r.no_vertex_count > 0);
        CHECK(r.q_facet_count > 0);
    }
    // Results come member-major: the seed's three degrees first.
    CHECK(report.results[0].path_length == 0);
    CHECK(report.results[2].path_length == 0);
    CHECK(report.results[3].path_length == 1);
    CHECK(report.results[0].r == 1);
    CHECK(report.results[1].r == 2);
    CHECK(report.results[2].r == 3);
}

TEST_CASE("an exhausted move budget raises an error") {
    CHECK_THROWS_AS(cmd_verify(GrassmannShape(2, 4), {1}, 1), MoveError);
    CHECK_THROWS_WITH(cmd_verify(GrassmannShape(2, 4), {1}, 1),
                      doctest::Contains("budget"));
}

TEST_CASE("a wrong expected count produces a certificate") {
    const RectanglesChart rc = build_rectangles_graph(GrassmannShape(2, 3));
    const MoveClass mc = move_class_bfs(rc.graph, rc.orientation, 100);
    REQUIRE(mc.members.size() == 1);

    const MemberResult r = verify_member(mc.members[0], 1, Int(999));
    CHECK(r.equal);
    CHECK(!r.counts_match);
    CHECK(!r.ok());
    CHECK(r.certificate.find("differs") != std::string::npos);
    CHECK(r.certificate.find("999") != std::string::npos);
}

TEST_CASE("report text is stable apart from the timing line") {
    const GrassmannShape shape(2, 4);
    const VerificationReport a = cmd_verify(shape, {1, 2});
    const VerificationReport b = cmd_verify(shape, {1, 2});
    CHECK(strip_time_line(report_text(a)) == strip_time_line(report_text(b)));

    const std::string text = report_text(a);
    CHECK(text.find("verify Gr(2,4)") == 0);
    CHECK(text.find("degrees: 1 2") != std::string::npos);
    CHECK(text.find("move class: 2 graphs, complete") != std::string::npos);
    CHECK(text.find("oracle counts: r=1 -> 6, r=2 -> 20") != std::string::npos);
    CHECK(text.find("graph 0 ") != std::string::npos);
    CHECK(text.find("graph 1 ") != std::string::npos);
    CHECK(text.find("checks passed: 4/4") != std::string::npos);
    CHECK(text.find("status: PASS") != std::string::npos);
    CHECK(text.find("certificate") == std::string::npos);
    CHECK(text.rfind("s\n") == text.size() - 2);

    // A failing run renders FAIL and the certificate text.
    VerificationReport bad = a;
    bad.results[1].counts_match = false;
    bad.results[1].certificate = "lattice-point count 20 differs from the expected count 21";
    CHECK(!bad.ok());
    const std::string bad_text = report_text(bad);
    CHECK(bad_text.find("status: FAIL") != std::string::npos);
    CHECK(bad_text.find("counts=NO") != std::string::npos);
    CHECK(bad_text.find("certificate: lattice-point count 20") != std::string::npos);
    CHECK(bad_text.find("checks passed: 3/4") != std::string::npos);
}
