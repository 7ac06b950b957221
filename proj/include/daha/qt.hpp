#pragma once

#include <map>
#include <string>
#include <utility>

#include "daha/rational.hpp"
#include "daha/qlaurent.hpp"

namespace daha {

// Integer-coefficient Laurent polynomial in q and t.
class QTPoly {
public:
    using Key = std::pair<int, int>;  // (q exponent, t exponent)

    QTPoly() = default;
    explicit QTPoly(const Integer& c) { if (c != 0) coef_[{0, 0}] = c; }
    explicit QTPoly(long c) : QTPoly(Integer(c)) {}

    static QTPoly monomial(int qe, int te, const Integer& c = 1);
    static QTPoly q() { return monomial(1, 0); }
    static QTPoly t() { return monomial(0, 1); }

    const std::map<Key, Integer>& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return coef_.size() == 1; }

    QTPoly& operator+=(const QTPoly& o);
    QTPoly& operator-=(const QTPoly& o);
    QTPoly operator+(const QTPoly& o) const { QTPoly r = *this; r += o; return r; }
    QTPoly operator-(const QTPoly& o) const { QTPoly r = *this; r -= o; return r; }
    QTPoly operator*(const QTPoly& o) const;
    QTPoly operator-() const;
    bool operator==(const QTPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const QTPoly& o) const { return !(*this == o); }
    bool operator<(const QTPoly& o) const { return coef_ < o.coef_; }

    // Exact division; success flag false if not divisible.
    bool divide_exact(const QTPoly& d, QTPoly& quot) const;

    Integer content() const;       // gcd of coefficients (positive), 0 for zero
    QTPoly swap_qt() const;         // q <-> t
    QTPoly invert_vars() const;     // q -> 1/q, t -> 1/t
    QTPoly substitute_q_tinv() const;  // t -> 1/q (collapses to q only)
    Rational eval(const Rational& qv, const Rational& tv) const;
    QLaurent eval_t(const Rational& tv) const;  // t -> number, Laurent in q

    // leading term in graded-lex order (q major); zero poly not allowed
    std::pair<Key, Integer> leading() const;

    std::string to_string() const;

private:
    std::map<Key, Integer> coef_;
    void trim(const Key& k);
};

// Ratio of two QTPoly, denominator nonzero.  Normalized by integer content
// and a fixed sign convention: the denominator's graded-lex leading
// coefficient is positive.  Equality is decided by cross-multiplication.
class QTScalar {
public:
    QTScalar() : num_(), den_(1) {}
    QTScalar(const QTPoly& num, const QTPoly& den);
    explicit QTScalar(const QTPoly& num) : QTScalar(num, QTPoly(1)) {}
    explicit QTScalar(long c) : QTScalar(QTPoly(c)) {}
    explicit QTScalar(const Rational& r);

    static QTScalar monomial(int qe, int te, const Integer& c = 1) {
        return QTScalar(QTPoly::monomial(qe, te, c));
    }

    const QTPoly& num() const { return num_; }
    const QTPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    QTScalar operator+(const QTScalar& o) const;
    QTScalar operator-(const QTScalar& o) const;
    QTScalar operator*(const QTScalar& o) const;
    QTScalar operator/(const QTScalar& o) const;
    QTScalar operator-() const;
    QTScalar& operator+=(const QTScalar& o) { return *this = *this + o; }
    QTScalar& operator-=(const QTScalar& o) { return *this = *this - o; }
    QTScalar& operator*=(const QTScalar& o) { return *this = *this * o; }
    bool operator==(const QTScalar& o) const;
    bool operator!=(const QTScalar& o) const { return !(*this == o); }

    QTScalar swap_qt() const { return QTScalar(num_.swap_qt(), den_.swap_qt()); }
    QTScalar invert_vars() const { return QTScalar(num_.invert_vars(), den_.invert_vars()); }
    Rational eval(const Rational& qv, const Rational& tv) const;

    // The scalar as a Laurent polynomial, if the division is exact.
    bool to_poly(QTPoly& out) const;
    QTPoly to_poly_or_throw() const;
    bool is_rational_constant(Rational& out) const;

    std::string to_string() const;

private:
    QTPoly num_, den_;
    void normalize();
};

}  // namespace daha
