#pragma once

#include <vector>

#include "grassdual/laurent.hpp"
#include "grassdual/linalg.hpp"
#include "grassdual/partitions.hpp"
#include "grassdual/plabic.hpp"
#include "grassdual/polytope.hpp"

namespace grassdual {

/// One summand of the boundary-divisor form of the superpotential: the ratio
/// p_{numerator}/p_{denominator}, carrying the quantum parameter q exactly
/// when the denominator is the full-rectangle label.
struct PluckerSummand {
    IndexSubset numerator;
    IndexSubset denominator;
    bool has_q = false;
};

/// The n summands of the superpotential in Pluecker form: for each boundary
/// index m, the ratio p_{J_m^+}/p_{J_m} where J_m is the west subset of the
/// m-th frozen label, with q attached at m = n-k.
std::vector<PluckerSummand> superpotential_plucker(const GrassmannShape& shape);

/// The superpotential written in the rectangles cluster: a Laurent
/// polynomial in the variables p_mu (mu a nonempty rectangle label) and q,
/// with 2k(n-k) - k - (n-k) + 2 monomial terms, each with coefficient one
/// and q-degree zero or one.
LaurentPoly superpotential_rectangles(const GrassmannShape& shape);

/// Rewrites the superpotential into the cluster reached from the rectangles
/// chart by mutating the listed face labels in order. Each step substitutes
/// p_{mu1} <- (p_{mu2} p_{mu4} + p_{mu3} p_{mu5}) / p_{mu1'} using the
/// exchange data of the replayed move; empty ring labels contribute the
/// constant 1. Divisions must be exact and all coefficients stay
/// nonnegative with per-term q-degree at most one; violations throw
/// PolynomialError. When `steps_out` is given, the replayed exchange data is
/// appended to it.
LaurentPoly superpotential_in_cluster(const GrassmannShape& shape,
                                      const std::vector<Partition>& move_path,
                                      std::vector<MutationStep>* steps_out = nullptr);

/// Throws PolynomialError unless every coefficient of w is a positive
/// integer and every term has q-degree zero or one.
void check_superpotential_form(const LaurentPoly& w);

/// Tropicalization at degree r >= 1: one condition r*(q-degree) +
/// sum_mu a_mu v_mu >= 0 per monomial of w, exact duplicates merged, axes
/// given by `coords` in the order supplied. The partition support of w must
/// be contained in coords.
HPolytope tropicalize(const LaurentPoly& w, int r, std::vector<Partition> coords);

/// The tropical superpotential polytope of the chart reached by `move_path`
/// from the rectangles chart, at degree r: tropicalize the rewritten
/// superpotential over the reached chart's labels.
HPolytope q_polytope(const GrassmannShape& shape, const std::vector<Partition>& move_path,
                     int r);

enum class SuperpotentialForm { plucker, rectangles, cluster };

/// Numeric cross-check of the superpotential forms: evaluates the chosen
/// form at p_mu = minor_{west(mu)}(m) / minor_{1..k}(m) with the given q
/// value, where minors are k x k column minors of the k x n matrix m.
/// `move_path` selects the cluster for the cluster form. Throws
/// PolynomialError when a needed minor vanishes (resample the matrix).
Rat evaluate_oracle(const RatMatrix& m, const Rat& q_value, SuperpotentialForm form,
                    const GrassmannShape& shape,
                    const std::vector<Partition>& move_path = {});

}  // namespace grassdual
