#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "grassdual/numeric.hpp"
#include "grassdual/partitions.hpp"

namespace grassdual {

/// Variable of a Laurent polynomial: either a coordinate indexed by a
/// partition (a network face variable or a cluster variable) or the
/// distinguished quantum parameter q. q sorts after all partition variables.
struct VarId {
    bool is_q = false;
    Partition label;

    static VarId q() { return VarId{true, Partition{}}; }
    static VarId of(Partition p) { return VarId{false, std::move(p)}; }

    auto operator<=>(const VarId&) const = default;
};

/// Exponent map with no zero entries; totally ordered (map comparison), so
/// polynomials have a canonical term order for storage and printing.
using Monomial = std::map<VarId, int>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_pow(const Monomial& a, int e);
int monomial_total_degree(const Monomial& m);

/// Laurent polynomial with arbitrary-precision integer coefficients in
/// finitely many VarId variables; exponents may be negative.
class LaurentPoly {
public:
    LaurentPoly() = default;
    static LaurentPoly zero() { return LaurentPoly{}; }
    static LaurentPoly constant(Int c);
    static LaurentPoly variable(const VarId& v, int exponent = 1);
    static LaurentPoly term(Int c, Monomial m);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    std::size_t num_terms() const { return terms_.size(); }
    const std::map<Monomial, Int>& terms() const { return terms_; }

    /// Variables that occur with nonzero exponent in some term.
    std::vector<VarId> support() const;

    /// Smallest exponent of v over all terms (0 if v does not occur).
    int min_exponent(const VarId& v) const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

    LaurentPoly pow(int e) const;  // e >= 0

    void add_term(const Int& c, const Monomial& m);

private:
    std::map<Monomial, Int> terms_;
};

/// Quotient h with f = g * h; throws PolynomialError if no Laurent
/// polynomial quotient with integer coefficients exists.
LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g);

/// Substitute v := value (a Laurent monomial, i.e. a unit) into f.
LaurentPoly substitute_monomial(const LaurentPoly& f, const VarId& v, const Monomial& value);

/// Substitute v := num / den into f, where den is a Laurent monomial.
/// Negative powers of v require exact division by the matching power of num.
LaurentPoly substitute_ratio(const LaurentPoly& f, const VarId& v, const LaurentPoly& num,
                             const Monomial& den);

/// Evaluate at the given variable values. Throws PolynomialError when a
/// variable with a negative exponent evaluates to zero or a variable in the
/// support has no value.
Rat evaluate(const LaurentPoly& f, const std::map<VarId, Rat>& values);

/// Exponent vector of the lexicographically minimal term of f with respect
/// to the significance order `order` (order[0] compared first). Every
/// non-q variable in the support of f must appear in `order`; q is ignored.
/// Throws PolynomialError for the zero polynomial.
std::vector<int> lex_min_term(const LaurentPoly& f, const std::vector<VarId>& order);

/// The term whose exponent vector is componentwise <= all other terms
/// (ignoring q), if one exists.
std::optional<Monomial> strongly_minimal_term(const LaurentPoly& f);

/// Rendering. Partition variables print as e.g. "x[3,1]" with the given
/// family letter; q prints as "q". Terms are ordered by (total degree,
/// internal monomial order); exponents as "^e" (negative exponents included).
std::string to_string(const LaurentPoly& f, char family = 'x');

/// Factored rendering "m*(...)" that pulls out the common monomial content
/// (componentwise minimum of exponents), used by the CLI.
std::string to_string_factored(const LaurentPoly& f, char family = 'x');

/// Parse the textual form produced by to_string (plus parentheses and
/// whitespace). Family letters 'x' and 'p' are accepted interchangeably.
LaurentPoly parse_laurent(const std::string& text);

}  // namespace grassdual
