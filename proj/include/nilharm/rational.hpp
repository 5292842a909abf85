#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "nilharm/errors.hpp"

namespace nilharm {

// Exact arithmetic throughout: mpq_class is kept canonical (lowest terms,
// positive denominator) by GMP, which is exactly the Rational contract.
using Rational = mpq_class;
using Int = mpz_class;
using RatVec = std::vector<Rational>;

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// mpq_class(p, q) does not reduce; every fraction built from possibly
// non-coprime parts must go through here.
inline Rational make_rat(long num, long den) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Int rat_floor(const Rational& q) {
    Int f;
    mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return f;
}

// Fractional part in [0,1).
inline Rational rat_frac(const Rational& q) { return q - Rational(rat_floor(q)); }

// Serialized as "p/q", or "p" when q = 1.
inline std::string rat_str(const Rational& q) { return q.get_str(); }

Rational rat_parse(const std::string& s);

inline bool vec_is_zero(const RatVec& v) {
    for (const auto& e : v)
        if (e != 0) return false;
    return true;
}

inline bool vec_is_integral(const RatVec& v) {
    for (const auto& e : v)
        if (!is_integer(e)) return false;
    return true;
}

inline Rational dot(const RatVec& a, const RatVec& b) {
    Rational s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

std::string vec_str(const RatVec& v);

}  // namespace nilharm
