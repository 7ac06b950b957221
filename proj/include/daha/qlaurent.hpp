#pragma once

#include <map>
#include <string>

#include "daha/rational.hpp"

namespace daha {

// Laurent polynomial in one variable over exact rationals.
// Normalized q-quantities live on a doubled exponent lattice: the stored
// exponent is twice the half-integer power, so [2]_q = q^{1/2}+q^{-1/2}
// is stored as {1: 1, -1: 1}.  Display decides how to print exponents.
class QLaurent {
public:
    QLaurent() = default;
    explicit QLaurent(const Rational& c) { if (!daha::is_zero(c)) coef_[0] = c; }

    static QLaurent monomial(int exp, const Rational& c = Rational(1));

    const std::map<int, Rational>& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    int min_exp() const;
    int max_exp() const;
    Rational coeff(int e) const;

    QLaurent& operator+=(const QLaurent& o);
    QLaurent& operator-=(const QLaurent& o);
    QLaurent operator+(const QLaurent& o) const { QLaurent r = *this; r += o; return r; }
    QLaurent operator-(const QLaurent& o) const { QLaurent r = *this; r -= o; return r; }
    QLaurent operator*(const QLaurent& o) const;
    QLaurent operator-() const;
    bool operator==(const QLaurent& o) const { return coef_ == o.coef_; }
    bool operator!=(const QLaurent& o) const { return !(*this == o); }

    // Exact division; throws if the quotient is not a Laurent polynomial.
    QLaurent divide_exact(const QLaurent& d) const;

    Rational eval_at_one() const;
    QLaurent substitute_power(int k) const;  // q -> q^k (k != 0; k = -1 inverts)

    std::string to_string(const std::string& var = "q", int denom = 1) const;

private:
    std::map<int, Rational> coef_;
    void trim(int e);
};

// Normalized q-integer [m]_q on the doubled lattice: exponents m-1, m-3, ..., 1-m.
QLaurent q_integer(int m);
QLaurent q_factorial(int m);

}  // namespace daha
