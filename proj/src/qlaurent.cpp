#include "daha/qlaurent.hpp"

#include <sstream>
#include <stdexcept>

namespace daha {

QLaurent QLaurent::monomial(int exp, const Rational& c) {
    QLaurent r;
    if (!daha::is_zero(c)) r.coef_[exp] = c;
    return r;
}

int QLaurent::min_exp() const {
    if (coef_.empty()) throw std::logic_error("min_exp of zero");
    return coef_.begin()->first;
}

int QLaurent::max_exp() const {
    if (coef_.empty()) throw std::logic_error("max_exp of zero");
    return coef_.rbegin()->first;
}

Rational QLaurent::coeff(int e) const {
    auto it = coef_.find(e);
    return it == coef_.end() ? Rational(0) : it->second;
}

void QLaurent::trim(int e) {
    auto it = coef_.find(e);
    if (it != coef_.end() && daha::is_zero(it->second)) coef_.erase(it);
}

QLaurent& QLaurent::operator+=(const QLaurent& o) {
    for (const auto& [e, c] : o.coef_) {
        coef_[e] += c;
        trim(e);
    }
    return *this;
}

QLaurent& QLaurent::operator-=(const QLaurent& o) {
    for (const auto& [e, c] : o.coef_) {
        coef_[e] -= c;
        trim(e);
    }
    return *this;
}

QLaurent QLaurent::operator*(const QLaurent& o) const {
    QLaurent r;
    for (const auto& [e1, c1] : coef_)
        for (const auto& [e2, c2] : o.coef_) {
            r.coef_[e1 + e2] += c1 * c2;
            r.trim(e1 + e2);
        }
    return r;
}

QLaurent QLaurent::operator-() const {
    QLaurent r;
    for (const auto& [e, c] : coef_) r.coef_[e] = -c;
    return r;
}

QLaurent QLaurent::divide_exact(const QLaurent& d) const {
    if (d.coef_.empty()) throw std::invalid_argument("division by zero");
    QLaurent rem = *this, quot;
    int dtop = d.max_exp();
    Rational dlc = d.coef_.rbegin()->second;
    while (!rem.coef_.empty()) {
        int rtop = rem.max_exp();
        Rational q = rem.coef_.rbegin()->second / dlc;
        QLaurent t = QLaurent::monomial(rtop - dtop, q);
        quot += t;
        rem -= t * d;
        if (!rem.coef_.empty() && rem.max_exp() >= rtop)
            throw std::logic_error("inexact Laurent division");
    }
    return quot;
}

Rational QLaurent::eval_at_one() const {
    Rational s = 0;
    for (const auto& [e, c] : coef_) s += c;
    return s;
}

QLaurent QLaurent::substitute_power(int k) const {
    if (k == 0) throw std::invalid_argument("substitute_power: k = 0");
    QLaurent r;
    for (const auto& [e, c] : coef_) r.coef_[e * k] = c;
    return r;
}

std::string QLaurent::to_string(const std::string& var, int denom) const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coef_.begin(); it != coef_.end(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rational a = abs(c);
        bool unit = (a == 1) && e != 0;
        if (!unit) os << rat_to_string(a);
        if (e != 0) {
            if (!unit) os << "*";
            os << var;
            if (e != denom) {
                os << "^";
                if (e % denom == 0) os << e / denom;
                else os << "(" << e << "/" << denom << ")";
            }
        }
        first = false;
    }
    return os.str();
}

QLaurent q_integer(int m) {
    if (m < 0) throw std::invalid_argument("q_integer: negative m");
    QLaurent r;
    for (int e = -(m - 1); e <= m - 1; e += 2) r += QLaurent::monomial(e);
    return r;
}

QLaurent q_factorial(int m) {
    QLaurent r(Rational(1));
    for (int i = 2; i <= m; ++i) r = r * q_integer(i);
    return r;
}

}  // namespace daha
