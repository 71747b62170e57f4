#include "grassdual/bmodel.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <utility>

#include "grassdual/errors.hpp"

namespace grassdual {

namespace {

/// Adds exponent e of the i x j rectangle variable to the monomial; empty
/// rectangles (i or j zero) are the constant 1 and contribute nothing.
void add_rectangle(Monomial& m, int i, int j, int e) {
    if (i <= 0 || j <= 0 || e == 0) return;
    const VarId v = VarId::of(Partition::rectangle(i, j));
    if ((m[v] += e) == 0) m.erase(v);
}

LaurentPoly ring_pair(const Partition& a, const Partition& b) {
    Monomial m;
    if (a.num_parts() != 0) m[VarId::of(a)] += 1;
    if (b.num_parts() != 0) m[VarId::of(b)] += 1;
    return LaurentPoly::term(1, std::move(m));
}

Rat determinant(RatMatrix a) {
    Rat d = 1;
    for (std::size_t c = 0; c < a.cols; ++c) {
        std::size_t pivot = c;
        while (pivot < a.rows && a.at(pivot, c) == 0) ++pivot;
        if (pivot == a.rows) return Rat(0);
        if (pivot != c) {
            for (std::size_t j = 0; j < a.cols; ++j) std::swap(a.at(pivot, j), a.at(c, j));
            d = -d;
        }
        d *= a.at(c, c);
        for (std::size_t i = c + 1; i < a.rows; ++i) {
            if (a.at(i, c) == 0) continue;
            const Rat f = a.at(i, c) / a.at(c, c);
            for (std::size_t j = c; j < a.cols; ++j) a.at(i, j) -= f * a.at(c, j);
        }
    }
    return d;
}

/// The k x k minor of m with the given column set (1-based).
Rat column_minor(const RatMatrix& m, const IndexSubset& cols) {
    RatMatrix sub(m.rows, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
        for (std::size_t j = 0; j < cols.size(); ++j)
            sub.at(i, j) = m.at(i, static_cast<std::size_t>(cols.elems()[j] - 1));
    return determinant(sub);
}

}  // namespace

std::vector<PluckerSummand> superpotential_plucker(const GrassmannShape& shape) {
    const std::vector<Partition> frozen = frozen_labels(shape);
    std::vector<PluckerSummand> out;
    out.reserve(static_cast<std::size_t>(shape.n));
    for (int m = 1; m <= shape.n; ++m) {
        PluckerSummand s;
        s.numerator = west_subset(shape, frozen_label_plus(shape, m));
        s.denominator = west_subset(shape, frozen[static_cast<std::size_t>(m - 1)]);
        s.has_q = m == shape.rows();
        out.push_back(std::move(s));
    }
    return out;
}

LaurentPoly superpotential_rectangles(const GrassmannShape& shape) {
    const int rows = shape.rows(), cols = shape.cols();
    LaurentPoly w;

    Monomial first;
    add_rectangle(first, 1, 1, 1);
    w += LaurentPoly::term(1, std::move(first));

    for (int i = 2; i <= rows; ++i)
        for (int j = 1; j <= cols; ++j) {
            Monomial m;
            add_rectangle(m, i, j, 1);
            add_rectangle(m, i - 2, j - 1, 1);
            add_rectangle(m, i - 1, j - 1, -1);
            add_rectangle(m, i - 1, j, -1);
            w += LaurentPoly::term(1, std::move(m));
        }

    Monomial qm;
    qm[VarId::q()] = 1;
    add_rectangle(qm, rows - 1, cols - 1, 1);
    add_rectangle(qm, rows, cols, -1);
    w += LaurentPoly::term(1, std::move(qm));

    for (int i = 1; i <= rows; ++i)
        for (int j = 2; j <= cols; ++j) {
            Monomial m;
            add_rectangle(m, i, j, 1);
            add_rectangle(m, i - 1, j - 2, 1);
            add_rectangle(m, i - 1, j - 1, -1);
            add_rectangle(m, i, j - 1, -1);
            w += LaurentPoly::term(1, std::move(m));
        }
    return w;
}

void check_superpotential_form(const LaurentPoly& w) {
    for (const auto& [mono, coeff] : w.terms()) {
        if (coeff <= 0)
            throw PolynomialError("superpotential term with non-positive coefficient " +
                                  to_string(coeff));
        const auto q = mono.find(VarId::q());
        if (q != mono.end() && q->second != 1)
            throw PolynomialError("superpotential term with q-degree " +
                                  std::to_string(q->second));
    }
}

LaurentPoly superpotential_in_cluster(const GrassmannShape& shape,
                                      const std::vector<Partition>& move_path,
                                      std::vector<MutationStep>* steps_out) {
    LaurentPoly w = superpotential_rectangles(shape);
    check_superpotential_form(w);
    PlabicGraph g = build_rectangles_graph(shape).graph;
    for (const Partition& at : move_path) {
        MutationStep step;
        g = mutate_face(g, at, &step);
        const LaurentPoly numerator =
            ring_pair(step.ring[0], step.ring[2]) + ring_pair(step.ring[1], step.ring[3]);
        Monomial denominator;
        denominator[VarId::of(step.mu1p)] = 1;
        w = substitute_ratio(w, VarId::of(step.mu1), numerator, denominator);
        check_superpotential_form(w);
        if (steps_out) steps_out->push_back(std::move(step));
    }
    return w;
}

HPolytope tropicalize(const LaurentPoly& w, int r, std::vector<Partition> coords) {
    if (r < 1) throw PolytopeError("tropicalization degree must be at least 1");
    check_superpotential_form(w);
    HPolytope h;
    h.ambient_dim = coords.size();
    h.coords = std::move(coords);

    std::set<std::pair<Rat, RatVec>> seen;
    for (const auto& [mono, coeff] : w.terms()) {
        Inequality iq;
        iq.constant = 0;
        iq.coeffs.assign(h.ambient_dim, Rat(0));
        for (const auto& [var, e] : mono) {
            if (var.is_q) {
                iq.constant = Rat(r) * e;
                continue;
            }
            const auto it = std::find(h.coords.begin(), h.coords.end(), var.label);
            if (it == h.coords.end())
                throw PolynomialError("superpotential variable [" + var.label.to_string() +
                                      "] is not a coordinate of the chart");
            iq.coeffs[static_cast<std::size_t>(it - h.coords.begin())] = e;
        }
        if (seen.emplace(iq.constant, iq.coeffs).second) h.inequalities.push_back(std::move(iq));
    }
    std::sort(h.inequalities.begin(), h.inequalities.end(),
              [](const Inequality& a, const Inequality& b) {
                  return std::tie(a.constant, a.coeffs) < std::tie(b.constant, b.coeffs);
              });
    return h;
}

HPolytope q_polytope(const GrassmannShape& shape, const std::vector<Partition>& move_path,
                     int r) {
    std::vector<MutationStep> steps;
    const LaurentPoly w = superpotential_in_cluster(shape, move_path, &steps);

    // The reached chart's labels: each move trades mu1 for mu1'.
    std::set<Partition> chart;
    for (int i = 1; i <= shape.rows(); ++i)
        for (int j = 1; j <= shape.cols(); ++j) chart.insert(Partition::rectangle(i, j));
    for (const MutationStep& step : steps) {
        if (chart.erase(step.mu1) != 1)
            throw LabelingError("move path mutates a label outside the chart");
        chart.insert(step.mu1p);
    }
    return tropicalize(w, r, coordinate_order({chart.begin(), chart.end()}));
}

Rat evaluate_oracle(const RatMatrix& m, const Rat& q_value, SuperpotentialForm form,
                    const GrassmannShape& shape, const std::vector<Partition>& move_path) {
    if (m.rows != static_cast<std::size_t>(shape.cols()) ||
        m.cols != static_cast<std::size_t>(shape.n))
        throw PolynomialError("oracle matrix must be k x n for the shape");

    std::vector<int> lead(static_cast<std::size_t>(shape.cols()));
    for (int i = 1; i <= shape.cols(); ++i) lead[static_cast<std::size_t>(i - 1)] = i;
    const Rat normalizer = column_minor(m, IndexSubset(lead));
    if (normalizer == 0)
        throw PolynomialError("vanishing normalization minor; resample the matrix");

    if (form == SuperpotentialForm::plucker) {
        Rat total = 0;
        for (const PluckerSummand& s : superpotential_plucker(shape)) {
            const Rat den = column_minor(m, s.denominator);
            if (den == 0)
                throw PolynomialError("vanishing denominator minor " +
                                      s.denominator.to_string() + "; resample the matrix");
            Rat term = column_minor(m, s.numerator) / den;
            if (s.has_q) term *= q_value;
            total += term;
        }
        return total;
    }

    const LaurentPoly w = form == SuperpotentialForm::rectangles
                              ? superpotential_rectangles(shape)
                              : superpotential_in_cluster(shape, move_path);
    std::map<VarId, Rat> values;
    for (const VarId& v : w.support()) {
        if (v.is_q)
            values.emplace(v, q_value);
        else
            values.emplace(v, column_minor(m, west_subset(shape, v.label)) / normalizer);
    }
    return evaluate(w, values);
}

}  // namespace grassdual
