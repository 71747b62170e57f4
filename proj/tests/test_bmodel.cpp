#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "grassdual/amodel.hpp"
#include "grassdual/bmodel.hpp"
#include "grassdual/errors.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"
#include "grassdual/polytope.hpp"

using namespace grassdual;

namespace {

Inequality iq(int c0, const std::vector<int>& a) {
    Inequality out;
    out.constant = c0;
    for (int x : a) out.coeffs.emplace_back(x);
    return out;
}

std::set<IntVec> fingerprint(const std::vector<Inequality>& iqs) {
    std::set<IntVec> rows;
    for (const Inequality& q : iqs) {
        RatVec h;
        h.push_back(q.constant);
        h.insert(h.end(), q.coeffs.begin(), q.coeffs.end());
        rows.insert(primitive_integer_vector(h));
    }
    return rows;
}

/// Tropical conditions of the (3,5) rectangles chart at degree r, columns
/// ((3,3),(2,2),(1,1),(3),(2),(1)).
std::vector<Inequality> conditions35(int r) {
    return {iq(0, {0, 0, 0, 0, 0, 1}),  iq(0, {0, 0, 1, 0, 0, -1}),
            iq(0, {0, 1, 0, 0, -1, -1}), iq(0, {1, 0, 0, -1, -1, 0}),
            iq(0, {0, 0, 0, 0, 1, -1}),  iq(0, {0, 0, 0, 1, -1, 0}),
            iq(0, {0, 1, -1, 0, 0, -1}), iq(0, {1, -1, 0, 0, -1, 1}),
            iq(r, {-1, 0, 0, 0, 1, 0})};
}

/// Tropical conditions of the (2,4) rectangles chart at degree r, columns
/// ((2,2),(1,1),(2),(1)).
std::vector<Inequality> conditions24(int r) {
    return {iq(0, {0, 0, 0, 1}),   iq(0, {0, 1, 0, -1}),  iq(0, {0, 0, 1, -1}),
            iq(0, {1, 0, -1, -1}), iq(0, {1, -1, 0, -1}), iq(r, {-1, 0, 0, 1})};
}

std::vector<int> subset(const IndexSubset& s) { return s.elems(); }

RatMatrix random_matrix(std::mt19937& rng, int k, int n) {
    std::uniform_int_distribution<int> entry(-5, 5);
    RatMatrix m(static_cast<std::size_t>(k), static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < m.cols; ++j) m.at(i, j) = entry(rng);
    return m;
}

std::set<IntVec> as_set(const std::vector<IntVec>& pts) {
    return std::set<IntVec>(pts.begin(), pts.end());
}

}  // namespace

TEST_CASE("boundary form of the superpotential for the (3,5) shape") {
    const std::vector<PluckerSummand> w = superpotential_plucker(GrassmannShape(3, 5));
    REQUIRE(w.size() == 5);
    CHECK(subset(w[0].numerator) == std::vector<int>{2, 3, 5});
    CHECK(subset(w[0].denominator) == std::vector<int>{2, 3, 4});
    CHECK(subset(w[1].numerator) == std::vector<int>{1, 3, 4});
    CHECK(subset(w[1].denominator) == std::vector<int>{3, 4, 5});
    CHECK(subset(w[2].numerator) == std::vector<int>{2, 4, 5});
    CHECK(subset(w[2].denominator) == std::vector<int>{1, 4, 5});
    CHECK(subset(w[3].numerator) == std::vector<int>{1, 3, 5});
    CHECK(subset(w[3].denominator) == std::vector<int>{1, 2, 5});
    CHECK(subset(w[4].numerator) == std::vector<int>{1, 2, 4});
    CHECK(subset(w[4].denominator) == std::vector<int>{1, 2, 3});
    for (std::size_t m = 0; m < w.size(); ++m) CHECK(w[m].has_q == (m + 1 == 2));
}

TEST_CASE("boundary form of the superpotential for the (2,4) shape") {
    const std::vector<PluckerSummand> w = superpotential_plucker(GrassmannShape(2, 4));
    REQUIRE(w.size() == 4);
    CHECK(subset(w[0].numerator) == std::vector<int>{2, 4});
    CHECK(subset(w[0].denominator) == std::vector<int>{2, 3});
    CHECK(subset(w[1].numerator) == std::vector<int>{1, 3});
    CHECK(subset(w[1].denominator) == std::vector<int>{3, 4});
    CHECK(subset(w[2].numerator) == std::vector<int>{2, 4});
    CHECK(subset(w[2].denominator) == std::vector<int>{1, 4});
    CHECK(subset(w[3].numerator) == std::vector<int>{1, 3});
    CHECK(subset(w[3].denominator) == std::vector<int>{1, 2});
    for (std::size_t m = 0; m < w.size(); ++m) CHECK(w[m].has_q == (m + 1 == 2));
    // Each numerator label is the denominator label plus one box.
    const GrassmannShape shape(2, 4);
    for (std::size_t m = 0; m < w.size(); ++m) {
        const Partition den = partition_from_west(shape, w[m].denominator);
        const Partition num = partition_from_west(shape, w[m].numerator);
        int den_size = 0, num_size = 0;
        for (int part : den.parts()) den_size += part;
        for (int part : num.parts()) num_size += part;
        if (m + 1 == 2)
            CHECK(den_size - num_size == 3);  // full rectangle down to (1)
        else
            CHECK(num_size - den_size == 1);
    }
}

TEST_CASE("rectangles form of the superpotential matches the published expression") {
    const LaurentPoly w = superpotential_rectangles(GrassmannShape(3, 5));
    const LaurentPoly expect = parse_laurent(
        "p[1] + p[1,1]*p[1]^-1 + p[2,2]*p[1]^-1*p[2]^-1 + p[3,3]*p[2]^-1*p[3]^-1 + "
        "p[2]*p[1]^-1 + p[3]*p[2]^-1 + p[2,2]*p[1]^-1*p[1,1]^-1 + "
        "p[3,3]*p[1]*p[2]^-1*p[2,2]^-1 + q*p[2]*p[3,3]^-1");
    CHECK(w == expect);
    CHECK_NOTHROW(check_superpotential_form(w));
}

TEST_CASE("rectangles form has the predicted term count") {
    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
        const GrassmannShape shape(k, n);
        const LaurentPoly w = superpotential_rectangles(shape);
        const int nk = shape.rows(), kk = shape.cols();
        CHECK(static_cast<int>(w.num_terms()) == 2 * kk * nk - kk - nk + 2);
        CHECK_NOTHROW(check_superpotential_form(w));
        // Exactly one term carries q.
        int q_terms = 0;
        for (const auto& [mono, coeff] : w.terms()) q_terms += mono.count(VarId::q()) ? 1 : 0;
        CHECK(q_terms == 1);
    }
}

TEST_CASE("tropicalization of the rectangles form gives the published conditions") {
    for (int r = 1; r <= 3; ++r) {
        const HPolytope h35 = q_polytope(GrassmannShape(3, 5), {}, r);
        CHECK(fingerprint(h35.inequalities) == fingerprint(conditions35(r)));
        const HPolytope h24 = q_polytope(GrassmannShape(2, 4), {}, r);
        CHECK(fingerprint(h24.inequalities) == fingerprint(conditions24(r)));
    }

    // Constants scale linearly with the degree, coefficients stay fixed.
    const HPolytope h1 = q_polytope(GrassmannShape(3, 5), {}, 1);
    const HPolytope h2 = q_polytope(GrassmannShape(3, 5), {}, 2);
    REQUIRE(h1.inequalities.size() == h2.inequalities.size());
    for (const Inequality& a : h1.inequalities) {
        bool found = false;
        for (const Inequality& b : h2.inequalities)
            if (b.coeffs == a.coeffs && b.constant == 2 * a.constant) found = true;
        CHECK(found);
    }
}

TEST_CASE("tropicalization of single terms") {
    const std::vector<Partition> coords =
        coordinate_order({Partition::parse("3,3"), Partition::parse("2")});
    const HPolytope a = tropicalize(parse_laurent("q*p[2]*p[3,3]^-1"), 5, coords);
    REQUIRE(a.inequalities.size() == 1);
    CHECK(a.inequalities[0].constant == 5);
    CHECK(a.inequalities[0].coeffs == RatVec{Rat(-1), Rat(1)});

    const HPolytope b = tropicalize(parse_laurent("p[2]"), 1, coords);
    REQUIRE(b.inequalities.size() == 1);
    CHECK(b.inequalities[0].constant == 0);
    CHECK(b.inequalities[0].coeffs == RatVec{Rat(0), Rat(1)});

    // Duplicated monomials merge into one condition.
    const HPolytope c = tropicalize(parse_laurent("p[2] + 2*p[2]"), 1, coords);
    CHECK(c.inequalities.size() == 1);

    CHECK_THROWS_AS(tropicalize(parse_laurent("p[1]"), 1, coords), PolynomialError);
    CHECK_THROWS_AS(tropicalize(parse_laurent("p[2] - p[3,3]"), 1, coords), PolynomialError);
    CHECK_THROWS_AS(tropicalize(parse_laurent("p[2]"), 0, coords), PolytopeError);
}

TEST_CASE("cluster rewriting is trivial on the empty path and involutive") {
    const GrassmannShape shape(2, 4);
    const LaurentPoly base = superpotential_rectangles(shape);
    CHECK(superpotential_in_cluster(shape, {}) == base);

    std::vector<MutationStep> steps;
    const LaurentPoly once =
        superpotential_in_cluster(shape, {Partition::parse("1")}, &steps);
    REQUIRE(steps.size() == 1);
    CHECK(steps[0].mu1 == Partition::parse("1"));
    CHECK(steps[0].mu1p == Partition::parse("2,1"));
    CHECK_FALSE(once == base);

    const LaurentPoly back =
        superpotential_in_cluster(shape, {Partition::parse("1"), Partition::parse("2,1")});
    CHECK(back == base);
}

TEST_CASE("cluster rewriting stays nonnegative across a whole move class") {
    RectanglesChart seed = build_rectangles_graph(GrassmannShape(2, 5));
    const MoveClass cls = move_class_bfs(seed.graph, seed.orientation, 100);
    REQUIRE(cls.members.size() == 5);
    for (const MoveClassMember& member : cls.members) {
        const LaurentPoly w = superpotential_in_cluster(GrassmannShape(2, 5), member.move_path);
        CHECK_NOTHROW(check_superpotential_form(w));
        // The supporting variables are exactly the member's nonempty face labels.
        const FaceLabeling labeling = face_labels(member.graph);
        std::set<Partition> expect(labeling.chart.begin(), labeling.chart.end());
        std::set<Partition> got;
        for (const VarId& v : w.support())
            if (!v.is_q) got.insert(v.label);
        CHECK(got == expect);
    }
}

TEST_CASE("tropical polytopes transform by the exchange map") {
    const GrassmannShape shape(2, 4);
    const std::vector<Partition> path{Partition::parse("1")};
    std::vector<MutationStep> steps;
    superpotential_in_cluster(shape, path, &steps);
    REQUIRE(steps.size() == 1);
    MutationMapSpec map;
    map.mu1 = steps[0].mu1;
    map.mu1p = steps[0].mu1p;
    map.ring = steps[0].ring;

    for (int r = 1; r <= 2; ++r) {
        const HPolytope base = q_polytope(shape, {}, r);
        const HPolytope image = q_polytope(shape, path, r);

        VPolytope carrier;
        carrier.coords = base.coords;
        for (const IntVec& z : lattice_points(base)) {
            RatVec p;
            for (const Int& c : z) p.emplace_back(c);
            carrier.vertices.push_back(std::move(p));
        }
        const VPolytope mapped = pl_mutate(carrier, map);
        CHECK(mapped.coords == image.coords);

        std::set<RatVec> got(mapped.vertices.begin(), mapped.vertices.end());
        std::set<RatVec> expect;
        for (const IntVec& z : lattice_points(image)) {
            RatVec p;
            for (const Int& c : z) p.emplace_back(c);
            expect.insert(std::move(p));
        }
        CHECK(got.size() == mapped.vertices.size());  // injective on lattice points
        CHECK(got == expect);
    }
}

TEST_CASE("numeric oracle: all superpotential forms agree on random matrices") {
    std::mt19937 rng(20240817u);
    const Rat q_value(3, 7);

    for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 5}}) {
        const GrassmannShape shape(k, n);
        int done = 0, attempts = 0;
        while (done < 30 && attempts < 500) {
            ++attempts;
            const RatMatrix m = random_matrix(rng, k, n);
            try {
                const Rat a = evaluate_oracle(m, q_value, SuperpotentialForm::plucker, shape);
                const Rat b = evaluate_oracle(m, q_value, SuperpotentialForm::rectangles, shape);
                CHECK(a == b);
                ++done;
            } catch (const PolynomialError&) {
                continue;  // vanishing minor: resample
            }
        }
        CHECK(done == 30);
    }

    // Cluster forms along real move paths agree too.
    const GrassmannShape shape(2, 4);
    int done = 0, attempts = 0;
    while (done < 20 && attempts < 500) {
        ++attempts;
        const RatMatrix m = random_matrix(rng, 2, 4);
        try {
            const Rat a = evaluate_oracle(m, q_value, SuperpotentialForm::rectangles, shape);
            const Rat b = evaluate_oracle(m, q_value, SuperpotentialForm::cluster, shape,
                                          {Partition::parse("1")});
            const Rat c = evaluate_oracle(m, q_value, SuperpotentialForm::cluster, shape,
                                          {Partition::parse("1"), Partition::parse("2,1")});
            CHECK(a == b);
            CHECK(a == c);
            ++done;
        } catch (const PolynomialError&) {
            continue;
        }
    }
    CHECK(done == 20);
}

TEST_CASE("numeric oracle: q = 0 drops exactly the quantum term") {
    std::mt19937 rng(7u);
    const GrassmannShape shape(2, 4);
    int done = 0, attempts = 0;
    while (done < 5 && attempts < 200) {
        ++attempts;
        const RatMatrix m = random_matrix(rng, 2, 4);
        try {
            // Both forms at q = 0 agree, and q enters linearly: the value at
            // q = 1 minus the value at q = 0 is the same for both forms.
            const Rat a0 = evaluate_oracle(m, Rat(0), SuperpotentialForm::plucker, shape);
            const Rat b0 = evaluate_oracle(m, Rat(0), SuperpotentialForm::rectangles, shape);
            const Rat a1 = evaluate_oracle(m, Rat(1), SuperpotentialForm::plucker, shape);
            const Rat b1 = evaluate_oracle(m, Rat(1), SuperpotentialForm::rectangles, shape);
            CHECK(a0 == b0);
            CHECK(a1 - a0 == b1 - b0);
            ++done;
        } catch (const PolynomialError&) {
            continue;
        }
    }
    CHECK(done == 5);
}

TEST_CASE("numeric oracle rejects matrices with vanishing normalization minor") {
    RatMatrix m(2, 4);
    // First two columns proportional: the normalization minor vanishes.
    m.at(0, 0) = 1;
    m.at(0, 1) = 2;
    m.at(1, 0) = 2;
    m.at(1, 1) = 4;
    m.at(0, 2) = 1;
    m.at(1, 3) = 1;
    CHECK_THROWS_AS(evaluate_oracle(m, Rat(1), SuperpotentialForm::plucker, GrassmannShape(2, 4)),
                    PolynomialError);
    RatMatrix wrong(1, 4);
    CHECK_THROWS_AS(
        evaluate_oracle(wrong, Rat(1), SuperpotentialForm::plucker, GrassmannShape(2, 4)),
        PolynomialError);
}
