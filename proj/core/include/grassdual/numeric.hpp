#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace grassdual {

/// Arbitrary-precision integer (GMP).
using Int = mpz_class;
/// Arbitrary-precision rational, always kept in canonical form (GMP).
using Rat = mpq_class;

using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Rat dot(const RatVec& a, const RatVec& b) {
    Rat s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

/// Largest integer <= q.
inline Int floor_of(const Rat& q) {
    Int r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

/// Smallest integer >= q.
inline Int ceil_of(const Rat& q) {
    Int r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

/// Scale a rational vector to coprime integers, preserving signs.
/// The zero vector maps to the zero vector.
inline IntVec primitive_integer_vector(const RatVec& v) {
    Int mult = 1;
    for (const Rat& q : v) mult = lcm(mult, q.get_den());
    IntVec w;
    w.reserve(v.size());
    Int g = 0;
    for (const Rat& q : v) {
        Int z = q.get_num() * (mult / q.get_den());
        g = gcd(g, z);
        w.push_back(z);
    }
    if (g > 1)
        for (Int& z : w) z /= g;
    return w;
}

inline std::string to_string(const Int& z) { return z.get_str(); }

inline std::string to_string(const Rat& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace grassdual
