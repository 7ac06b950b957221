#pragma once

#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace daha {

// Exact rationals. GMP keeps them normalized: positive denominator, gcd 1.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

// "p/q" (or just "p") with normalized sign, used by the JSON cache format.
inline std::string rat_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rat_from_string(const std::string& s) {
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    r.canonicalize();
    return r;
}

// Bit size of numerator plus denominator; used to pick small pivots.
inline size_t rat_bits(const Rational& r) {
    return mpz_sizeinbase(r.get_num().get_mpz_t(), 2) +
           mpz_sizeinbase(r.get_den().get_mpz_t(), 2);
}

}  // namespace daha
