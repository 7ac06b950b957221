#include "daha/qt.hpp"

#include <sstream>
#include <stdexcept>

namespace daha {

QTPoly QTPoly::monomial(int qe, int te, const Integer& c) {
    QTPoly p;
    if (c != 0) p.coef_[{qe, te}] = c;
    return p;
}

bool QTPoly::is_one() const {
    return coef_.size() == 1 && coef_.begin()->first == Key{0, 0} && coef_.begin()->second == 1;
}

void QTPoly::trim(const Key& k) {
    auto it = coef_.find(k);
    if (it != coef_.end() && it->second == 0) coef_.erase(it);
}

QTPoly& QTPoly::operator+=(const QTPoly& o) {
    for (const auto& [k, c] : o.coef_) {
        coef_[k] += c;
        trim(k);
    }
    return *this;
}

QTPoly& QTPoly::operator-=(const QTPoly& o) {
    for (const auto& [k, c] : o.coef_) {
        coef_[k] -= c;
        trim(k);
    }
    return *this;
}

QTPoly QTPoly::operator*(const QTPoly& o) const {
    QTPoly r;
    for (const auto& [k1, c1] : coef_)
        for (const auto& [k2, c2] : o.coef_) {
            Key k{k1.first + k2.first, k1.second + k2.second};
            r.coef_[k] += c1 * c2;
            r.trim(k);
        }
    return r;
}

QTPoly QTPoly::operator-() const {
    QTPoly r;
    for (const auto& [k, c] : coef_) r.coef_[k] = -c;
    return r;
}

std::pair<QTPoly::Key, Integer> QTPoly::leading() const {
    if (coef_.empty()) throw std::logic_error("leading term of zero");
    // graded-lex, q major
    auto best = coef_.begin();
    long bd = best->first.first + best->first.second;
    for (auto it = std::next(coef_.begin()); it != coef_.end(); ++it) {
        long d = it->first.first + it->first.second;
        if (d > bd || (d == bd && it->first > best->first)) {
            best = it;
            bd = d;
        }
    }
    return {best->first, best->second};
}

bool QTPoly::divide_exact(const QTPoly& d, QTPoly& quot) const {
    if (d.is_zero()) throw std::invalid_argument("QTPoly division by zero");
    quot = QTPoly();
    if (is_zero()) return true;
    // normalize both to the positive orthant; the minimal exponent per
    // variable is additive under multiplication, so the quotient of the
    // shifted polynomials has nonnegative exponents when divisible
    auto min_exps = [](const QTPoly& p) {
        int mq = p.coef_.begin()->first.first, mt = p.coef_.begin()->first.second;
        for (const auto& [k, c] : p.coef_) {
            mq = std::min(mq, k.first);
            mt = std::min(mt, k.second);
        }
        return Key{mq, mt};
    };
    Key sn = min_exps(*this), sd = min_exps(d);
    QTPoly rem, den;
    for (const auto& [k, c] : coef_) rem.coef_[{k.first - sn.first, k.second - sn.second}] = c;
    for (const auto& [k, c] : d.coef_) den.coef_[{k.first - sd.first, k.second - sd.second}] = c;
    auto [dk, dc] = den.leading();
    QTPoly q;
    while (!rem.is_zero()) {
        auto [rk, rc] = rem.leading();
        if (rk.first < dk.first || rk.second < dk.second) return false;
        if (rc % dc != 0) return false;
        Key qk{rk.first - dk.first, rk.second - dk.second};
        QTPoly t = QTPoly::monomial(qk.first, qk.second, rc / dc);
        q += t;
        rem -= t * den;
    }
    // undo the shifts
    for (const auto& [k, c] : q.coef_)
        quot.coef_[{k.first + sn.first - sd.first, k.second + sn.second - sd.second}] = c;
    return true;
}

Integer QTPoly::content() const {
    Integer g = 0;
    for (const auto& [k, c] : coef_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

QTPoly QTPoly::swap_qt() const {
    QTPoly r;
    for (const auto& [k, c] : coef_) r.coef_[{k.second, k.first}] = c;
    return r;
}

QTPoly QTPoly::invert_vars() const {
    QTPoly r;
    for (const auto& [k, c] : coef_) r.coef_[{-k.first, -k.second}] = c;
    return r;
}

QTPoly QTPoly::substitute_q_tinv() const {
    QTPoly r;
    for (const auto& [k, c] : coef_) {
        Key nk{k.first - k.second, 0};
        r.coef_[nk] += c;
        r.trim(nk);
    }
    return r;
}

Rational QTPoly::eval(const Rational& qv, const Rational& tv) const {
    auto pw = [](const Rational& b, int e) {
        Rational r = 1;
        Rational base = e >= 0 ? b : 1 / b;
        for (int i = 0; i < std::abs(e); ++i) r *= base;
        return r;
    };
    Rational s = 0;
    for (const auto& [k, c] : coef_) s += Rational(c) * pw(qv, k.first) * pw(tv, k.second);
    return s;
}

QLaurent QTPoly::eval_t(const Rational& tv) const {
    QLaurent out;
    for (const auto& [k, c] : coef_) {
        Rational f(c);
        Rational base = k.second >= 0 ? tv : 1 / tv;
        for (int i = 0; i < std::abs(k.second); ++i) f *= base;
        out += QLaurent::monomial(k.first, f);
    }
    return out;
}

std::string QTPoly::to_string() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coef_) {
        if (!first) os << (c >= 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Integer a = abs(c);
        bool printed = false;
        if (a != 1 || (k.first == 0 && k.second == 0)) {
            os << a.get_str();
            printed = true;
        }
        auto var = [&](const char* name, int e) {
            if (e == 0) return;
            if (printed) os << "*";
            os << name;
            if (e != 1) os << "^" << e;
            printed = true;
        };
        var("q", k.first);
        var("t", k.second);
        first = false;
    }
    return os.str();
}

// ---- QTScalar ----

QTScalar::QTScalar(const QTPoly& num, const QTPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw std::invalid_argument("QTScalar: zero denominator");
    normalize();
}

QTScalar::QTScalar(const Rational& r)
    : QTScalar(QTPoly(Integer(r.get_num())), QTPoly(Integer(r.get_den()))) {}

void QTScalar::normalize() {
    if (num_.is_zero()) {
        den_ = QTPoly(1);
        return;
    }
    // opportunistic exact cancellation
    QTPoly q;
    if (num_.divide_exact(den_, q)) {
        num_ = q;
        den_ = QTPoly(1);
    } else if (den_.divide_exact(num_, q)) {
        // num/den = 1/q
        num_ = QTPoly(1);
        den_ = q;
    }
    Integer cn = num_.content(), cd = den_.content();
    Integer g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (g > 1) {
        QTPoly qn, qd;
        num_.divide_exact(QTPoly(g), qn);
        den_.divide_exact(QTPoly(g), qd);
        num_ = qn;
        den_ = qd;
    }
    if (den_.leading().second < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

QTScalar QTScalar::operator+(const QTScalar& o) const {
    if (den_ == o.den_) return QTScalar(num_ + o.num_, den_);
    return QTScalar(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

QTScalar QTScalar::operator-(const QTScalar& o) const {
    if (den_ == o.den_) return QTScalar(num_ - o.num_, den_);
    return QTScalar(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

QTScalar QTScalar::operator*(const QTScalar& o) const {
    // cross-cancel before multiplying to keep degrees down
    if (num_.is_zero() || o.num_.is_zero()) return QTScalar(0);
    QTPoly a = num_, b = den_, c = o.num_, d = o.den_, q;
    if (a.divide_exact(d, q)) { a = q; d = QTPoly(1); }
    else if (d.divide_exact(a, q)) { d = q; a = QTPoly(1); }
    if (c.divide_exact(b, q)) { c = q; b = QTPoly(1); }
    else if (b.divide_exact(c, q)) { b = q; c = QTPoly(1); }
    return QTScalar(a * c, b * d);
}

QTScalar QTScalar::operator/(const QTScalar& o) const {
    if (o.is_zero()) throw std::invalid_argument("QTScalar division by zero");
    return *this * QTScalar(o.den_, o.num_);
}

QTScalar QTScalar::operator-() const {
    QTScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

bool QTScalar::operator==(const QTScalar& o) const {
    return num_ * o.den_ == o.num_ * den_;
}

Rational QTScalar::eval(const Rational& qv, const Rational& tv) const {
    Rational d = den_.eval(qv, tv);
    if (daha::is_zero(d)) throw std::logic_error("QTScalar eval: denominator vanishes");
    return num_.eval(qv, tv) / d;
}

bool QTScalar::to_poly(QTPoly& out) const {
    return num_.divide_exact(den_, out);
}

QTPoly QTScalar::to_poly_or_throw() const {
    QTPoly p;
    if (!to_poly(p)) throw std::logic_error("QTScalar is not a polynomial: " + to_string());
    return p;
}

bool QTScalar::is_rational_constant(Rational& out) const {
    if (num_.is_zero()) { out = 0; return true; }
    if (num_.terms().size() == 1 && den_.terms().size() == 1) {
        auto [kn, cn] = *num_.terms().begin();
        auto [kd, cd] = *den_.terms().begin();
        if (kn == kd) {
            out = Rational(cn) / Rational(cd);
            return true;
        }
        if (kn.first == 0 && kn.second == 0 && kd.first == 0 && kd.second == 0) {
            out = Rational(cn) / Rational(cd);
            return true;
        }
        return false;
    }
    return false;
}

std::string QTScalar::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace daha
