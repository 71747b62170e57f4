#include "grassdual/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "grassdual/errors.hpp"

namespace grassdual {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [v, e] : b) {
        const int ne = (r.count(v) ? r[v] : 0) + e;
        if (ne == 0)
            r.erase(v);
        else
            r[v] = ne;
    }
    return r;
}

Monomial monomial_pow(const Monomial& a, int e) {
    Monomial r;
    if (e == 0) return r;
    for (const auto& [v, x] : a) r[v] = x * e;
    return r;
}

int monomial_total_degree(const Monomial& m) {
    int d = 0;
    for (const auto& [v, e] : m) d += e;
    return d;
}

LaurentPoly LaurentPoly::constant(Int c) {
    LaurentPoly f;
    f.add_term(c, Monomial{});
    return f;
}

LaurentPoly LaurentPoly::variable(const VarId& v, int exponent) {
    LaurentPoly f;
    Monomial m;
    if (exponent != 0) m[v] = exponent;
    f.add_term(1, m);
    return f;
}

LaurentPoly LaurentPoly::term(Int c, Monomial m) {
    LaurentPoly f;
    f.add_term(c, m);
    return f;
}

bool LaurentPoly::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() && terms_.begin()->second == 1;
}

std::vector<VarId> LaurentPoly::support() const {
    std::set<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m) vars.insert(v);
    return std::vector<VarId>(vars.begin(), vars.end());
}

int LaurentPoly::min_exponent(const VarId& v) const {
    int lo = 0;
    for (const auto& [m, c] : terms_) {
        const auto it = m.find(v);
        const int e = it == m.end() ? 0 : it->second;
        lo = std::min(lo, e);
    }
    return lo;
}

void LaurentPoly::add_term(const Int& c, const Monomial& m) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(c, m);
    return *this;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(-c, m);
    return r;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) r.add_term(ca * cb, monomial_mul(ma, mb));
    return r;
}

LaurentPoly LaurentPoly::pow(int e) const {
    if (e < 0) throw PolynomialError("pow: negative exponent on a non-monomial");
    LaurentPoly r = constant(1);
    for (int t = 0; t < e; ++t) r = r * *this;
    return r;
}

namespace {

// Shift f by the monomial that clears all negative exponents, making every
// term an honest polynomial monomial. Returns the shift used.
Monomial clear_denominators(LaurentPoly& f) {
    Monomial shift;
    std::set<VarId> vars;
    for (const auto& [m, c] : f.terms())
        for (const auto& [v, e] : m)
            if (e < 0) vars.insert(v);
    for (const VarId& v : vars) shift[v] = -f.min_exponent(v);
    if (!shift.empty()) {
        LaurentPoly g;
        for (const auto& [m, c] : f.terms()) g.add_term(c, monomial_mul(m, shift));
        f = g;
    }
    return shift;
}

}  // namespace

namespace {

// Graded lexicographic comparison (admissible monomial order) for monomials
// with nonnegative exponents. Required by the division loop: it must be
// compatible with multiplication, which the storage order is not.
bool grlex_less(const Monomial& a, const Monomial& b) {
    const int da = monomial_total_degree(a), db = monomial_total_degree(b);
    if (da != db) return da < db;
    // Walk the union of supports in VarId order. Stored exponents are
    // strictly positive here, so whichever side owns an earlier variable is
    // lex-greater.
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ia == a.end()) return true;   // b has an extra positive exponent
        if (ib == b.end()) return false;  // a has an extra positive exponent
        if (ia->first < ib->first) return false;
        if (ib->first < ia->first) return true;
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

}  // namespace

namespace {

// Componentwise minimum exponent per variable (the monomial content of a
// polynomial with nonnegative exponents). Dividing it out makes the quotient
// of two Laurent-divisible inputs a genuine polynomial.
Monomial monomial_content(const LaurentPoly& p) {
    Monomial content;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        if (first) {
            content = m;
            first = false;
            continue;
        }
        for (auto it = content.begin(); it != content.end();) {
            const auto jt = m.find(it->first);
            const int e = jt == m.end() ? 0 : jt->second;
            if (e <= 0) {
                it = content.erase(it);
            } else {
                it->second = std::min(it->second, e);
                ++it;
            }
        }
    }
    return content;
}

}  // namespace

LaurentPoly exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    if (g.is_zero()) throw PolynomialError("exact_div: division by zero");
    if (f.is_zero()) return LaurentPoly::zero();
    // Normalize both inputs to content-free polynomials. The stripped unit
    // factors transfer to the quotient exactly, and content-free inputs
    // guarantee that a Laurent-divisible pair has a genuine polynomial
    // quotient (the lowest degree per variable is zero on both sides).
    LaurentPoly fn = f, gn = g;
    Monomial shift = clear_denominators(gn);  // accumulates shift_g / shift_f
    {
        const Monomial sf = clear_denominators(fn);
        for (const auto& [v, e] : sf) shift[v] -= e;
    }
    auto strip = [&shift](LaurentPoly& p, int sign) {
        const Monomial content = monomial_content(p);
        if (content.empty()) return;
        for (const auto& [v, e] : content) shift[v] += sign * e;
        Monomial inverse;
        for (const auto& [v, e] : content) inverse[v] = -e;
        LaurentPoly stripped;
        for (const auto& [m, c] : p.terms()) stripped.add_term(c, monomial_mul(m, inverse));
        p = stripped;
    };
    strip(fn, +1);  // f = content_f * fn, so content_f multiplies the quotient
    strip(gn, -1);  // g = content_g * gn, so content_g divides the quotient
    std::erase_if(shift, [](const auto& kv) { return kv.second == 0; });
    // Single-divisor reduction with a graded-lex order: for an exact division
    // f = g*h the leading terms satisfy lead(f) = lead(g)*lead(h), so each
    // step cancels lead(f), the lead strictly decreases, and the loop
    // terminates (with an error if any step fails to divide).
    auto lead_of = [](const LaurentPoly& p) {
        auto best = p.terms().begin();
        for (auto it = std::next(best); it != p.terms().end(); ++it)
            if (grlex_less(best->first, it->first)) best = it;
        return best;
    };
    LaurentPoly quotient;
    const auto glead = *lead_of(gn);
    LaurentPoly rem = fn;
    while (!rem.is_zero()) {
        const auto flead = *lead_of(rem);
        // Divide monomials: every exponent of glead.first must be covered.
        Monomial qm = flead.first;
        for (const auto& [v, e] : glead.first) {
            const auto it = qm.find(v);
            const int fe = it == qm.end() ? 0 : it->second;
            const int qe = fe - e;
            if (qe < 0) throw PolynomialError("exact_div: not divisible");
            if (qe == 0)
                qm.erase(v);
            else
                qm[v] = qe;
        }
        Int qc, rq;
        mpz_tdiv_qr(qc.get_mpz_t(), rq.get_mpz_t(), flead.second.get_mpz_t(),
                    glead.second.get_mpz_t());
        if (rq != 0) throw PolynomialError("exact_div: coefficient not divisible");
        const LaurentPoly qt = LaurentPoly::term(qc, qm);
        quotient += qt;
        rem = rem - qt * gn;
    }
    // Reattach the unit factor: f = g * (quotient * shift).
    LaurentPoly out;
    for (const auto& [m, c] : quotient.terms()) out.add_term(c, monomial_mul(m, shift));
    return out;
}

LaurentPoly substitute_monomial(const LaurentPoly& f, const VarId& v, const Monomial& value) {
    LaurentPoly out;
    for (const auto& [m, c] : f.terms()) {
        const auto it = m.find(v);
        if (it == m.end()) {
            out.add_term(c, m);
            continue;
        }
        const int e = it->second;
        Monomial rest = m;
        rest.erase(v);
        out.add_term(c, monomial_mul(rest, monomial_pow(value, e)));
    }
    return out;
}

LaurentPoly substitute_ratio(const LaurentPoly& f, const VarId& v, const LaurentPoly& num,
                             const Monomial& den) {
    if (num.is_zero()) throw PolynomialError("substitute_ratio: zero numerator");
    const int lo = f.min_exponent(v);
    const int m = lo < 0 ? -lo : 0;
    // f = sum_e f_e v^e  ->  sum_e f_e num^(e+m) den^(-e) / num^m.
    LaurentPoly shifted;
    for (const auto& [mono, c] : f.terms()) {
        const auto it = mono.find(v);
        const int e = it == mono.end() ? 0 : it->second;
        Monomial rest = mono;
        rest.erase(v);
        LaurentPoly piece = LaurentPoly::term(c, monomial_mul(rest, monomial_pow(den, -e)));
        shifted += piece * num.pow(e + m);
    }
    if (m == 0) return shifted;
    return exact_div(shifted, num.pow(m));
}

Rat evaluate(const LaurentPoly& f, const std::map<VarId, Rat>& values) {
    Rat total = 0;
    for (const auto& [m, c] : f.terms()) {
        Rat t(c);
        for (const auto& [v, e] : m) {
            const auto it = values.find(v);
            if (it == values.end()) throw PolynomialError("evaluate: missing variable value");
            const Rat& x = it->second;
            if (x == 0) {
                if (e < 0) throw PolynomialError("evaluate: pole (zero raised to negative power)");
                t = 0;
                break;
            }
            Rat p = 1;
            for (int i = 0; i < std::abs(e); ++i) p *= x;
            if (e < 0) p = 1 / p;
            t *= p;
        }
        total += t;
    }
    return total;
}

std::vector<int> lex_min_term(const LaurentPoly& f, const std::vector<VarId>& order) {
    if (f.is_zero()) throw PolynomialError("lex_min_term: zero polynomial");
    for (const VarId& v : f.support()) {
        if (v.is_q) continue;
        if (std::find(order.begin(), order.end(), v) == order.end())
            throw PolynomialError("lex_min_term: variable x[" + v.label.to_string() +
                                  "] missing from order");
    }
    auto exponents = [&](const Monomial& m) {
        std::vector<int> e;
        e.reserve(order.size());
        for (const VarId& v : order) {
            const auto it = m.find(v);
            e.push_back(it == m.end() ? 0 : it->second);
        }
        return e;
    };
    std::vector<int> best;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        std::vector<int> e = exponents(m);
        if (first || e < best) {
            best = std::move(e);
            first = false;
        }
    }
    return best;
}

std::optional<Monomial> strongly_minimal_term(const LaurentPoly& f) {
    if (f.is_zero()) return std::nullopt;
    auto leq = [](const Monomial& a, const Monomial& b) {
        for (const auto& [v, e] : a) {
            if (v.is_q) continue;
            const auto it = b.find(v);
            const int be = it == b.end() ? 0 : it->second;
            if (e > be) return false;
        }
        return true;  // entries of b absent from a are >= 0? checked below
    };
    for (const auto& [cand, cc] : f.terms()) {
        bool ok = true;
        for (const auto& [m, c] : f.terms()) {
            // cand <= m componentwise requires both directions of the scan:
            // exponents present in m but not in cand must be >= 0.
            if (!leq(cand, m)) {
                ok = false;
                break;
            }
            for (const auto& [v, e] : m) {
                if (v.is_q || cand.count(v)) continue;
                if (e < 0) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (ok) return cand;
    }
    return std::nullopt;
}

namespace {

std::string var_to_string(const VarId& v, char family) {
    if (v.is_q) return "q";
    return std::string(1, family) + "[" + v.label.to_string() + "]";
}

/// Display order for variables inside one monomial: partition variables by
/// increasing box count (ties by part vector), then q.
bool display_less(const VarId& a, const VarId& b) {
    if (a.is_q != b.is_q) return b.is_q;
    if (a.is_q) return false;
    if (a.label.size() != b.label.size()) return a.label.size() < b.label.size();
    return a.label < b.label;
}

std::string term_to_string(const Int& c, const Monomial& m, char family) {
    std::string s;
    if (m.empty()) return c.get_str();
    if (c == -1)
        s = "-";
    else if (c != 1)
        s = c.get_str() + "*";
    std::vector<std::pair<VarId, int>> vars(m.begin(), m.end());
    std::sort(vars.begin(), vars.end(),
              [](const auto& x, const auto& y) { return display_less(x.first, y.first); });
    bool first = true;
    for (const auto& [v, e] : vars) {
        if (!first) s += "*";
        first = false;
        s += var_to_string(v, family);
        if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
}

std::vector<std::pair<Monomial, Int>> sorted_terms(const LaurentPoly& f) {
    std::vector<std::pair<Monomial, Int>> ts(f.terms().begin(), f.terms().end());
    std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
        const int da = monomial_total_degree(a.first), db = monomial_total_degree(b.first);
        if (da != db) return da < db;
        return a.first < b.first;
    });
    return ts;
}

}  // namespace

std::string to_string(const LaurentPoly& f, char family) {
    if (f.is_zero()) return "0";
    std::string s;
    for (const auto& [m, c] : sorted_terms(f)) {
        std::string t = term_to_string(c, m, family);
        if (!s.empty()) {
            if (!t.empty() && t[0] == '-') {
                s += " - ";
                t = t.substr(1);
            } else {
                s += " + ";
            }
        }
        s += t;
    }
    return s;
}

std::string to_string_factored(const LaurentPoly& f, char family) {
    if (f.is_zero()) return "0";
    // Componentwise minimum of all exponent vectors = common monomial content.
    Monomial content;
    std::set<VarId> vars;
    for (const auto& [m, c] : f.terms())
        for (const auto& [v, e] : m) vars.insert(v);
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Monomial cur;
        for (const VarId& v : vars) {
            const auto it = m.find(v);
            cur[v] = it == m.end() ? 0 : it->second;
        }
        if (first) {
            content = cur;
            first = false;
        } else {
            for (auto& [v, e] : content) e = std::min(e, cur[v]);
        }
    }
    std::erase_if(content, [](const auto& kv) { return kv.second == 0; });
    if (content.empty()) return to_string(f, family);
    Monomial inv = monomial_pow(content, -1);
    LaurentPoly rest;
    for (const auto& [m, c] : f.terms()) rest.add_term(c, monomial_mul(m, inv));
    if (rest.is_one()) return term_to_string(1, content, family);
    return term_to_string(1, content, family) + "*(" + to_string(rest, family) + ")";
}

namespace {

struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip_ws();
        return pos < s.size() && s[pos] == c;
    }
    bool accept(char c) {
        if (peek(c)) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "' at position " +
                                         std::to_string(pos) + " in Laurent text");
    }

    int parse_int() {
        skip_ws();
        std::size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in Laurent text");
        return std::stoi(s.substr(start, pos - start));
    }

    Int parse_bigint() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer in Laurent text");
        return Int(s.substr(start, pos - start));
    }

    LaurentPoly parse_sum() {
        LaurentPoly acc;
        bool neg = false;
        skip_ws();
        if (accept('-')) neg = true;
        acc += neg ? -parse_product() : parse_product();
        while (true) {
            skip_ws();
            if (accept('+'))
                acc += parse_product();
            else if (accept('-'))
                acc += -parse_product();
            else
                break;
        }
        return acc;
    }

    LaurentPoly parse_product() {
        LaurentPoly acc = parse_factor();
        while (accept('*')) acc = acc * parse_factor();
        return acc;
    }

    LaurentPoly parse_factor() {
        skip_ws();
        if (accept('(')) {
            LaurentPoly inner = parse_sum();
            expect(')');
            return apply_power(inner);
        }
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
            return apply_power(LaurentPoly::constant(parse_bigint()));
        if (pos < s.size() && (s[pos] == 'x' || s[pos] == 'p' || s[pos] == 'q')) {
            const char head = s[pos++];
            if (head == 'q') return apply_power(LaurentPoly::variable(VarId::q()));
            expect('[');
            std::string body;
            while (pos < s.size() && s[pos] != ']') body += s[pos++];
            expect(']');
            return apply_power(LaurentPoly::variable(VarId::of(Partition::parse(body))));
        }
        throw ParseError("unexpected character at position " + std::to_string(pos) +
                         " in Laurent text");
    }

    LaurentPoly apply_power(LaurentPoly base) {
        if (!accept('^')) return base;
        const int e = parse_int();
        if (e >= 0) return base.pow(e);
        if (base.num_terms() != 1)
            throw ParseError("negative power of a non-monomial in Laurent text");
        const auto& [m, c] = *base.terms().begin();
        if (c != 1 && c != -1)
            throw ParseError("negative power of a non-unit coefficient in Laurent text");
        Int cc = (e % 2 == 0) ? Int(1) : c;
        return LaurentPoly::term(cc, monomial_pow(m, e));
    }
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text) {
    Parser p(text);
    LaurentPoly f = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) throw ParseError("trailing characters in Laurent text");
    return f;
}

}  // namespace grassdual
