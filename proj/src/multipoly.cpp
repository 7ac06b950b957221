#include "daha/multipoly.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace daha {

bool GradedLexGreater::operator()(const ExpVec& a, const ExpVec& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return a > b;  // lexicographic, x_1 major
}

MultiPoly MultiPoly::constant(int nvars, const Rational& c) {
    MultiPoly p(nvars);
    p.add_term(ExpVec(nvars, 0), c);
    return p;
}

MultiPoly MultiPoly::monomial(const ExpVec& e, const Rational& c) {
    MultiPoly p((int)e.size());
    p.add_term(e, c);
    return p;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
    ExpVec e(nvars, 0);
    e.at(i - 1) = 1;
    return monomial(e);
}

int MultiPoly::degree() const {
    if (terms_.empty()) return -1;
    const ExpVec& lead = terms_.begin()->first;
    return std::accumulate(lead.begin(), lead.end(), 0);
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = degree();
    for (const auto& [e, c] : terms_)
        if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
    return true;
}

Rational MultiPoly::coeff(const ExpVec& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rational(0) : it->second;
}

Rational MultiPoly::constant_term() const {
    return coeff(ExpVec(nvars_, 0));
}

void MultiPoly::add_term(const ExpVec& e, const Rational& c) {
    if ((int)e.size() != nvars_) throw std::invalid_argument("exponent length mismatch");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (!daha::is_zero(c)) terms_.emplace(e, c);
    } else {
        it->second += c;
        if (daha::is_zero(it->second)) terms_.erase(it);
    }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    if (nvars_ != o.nvars_) {
        if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
        else throw std::invalid_argument("variable-count mismatch");
    }
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    if (o.terms_.empty()) return *this;
    if (nvars_ != o.nvars_) {
        if (terms_.empty() && nvars_ == 0) nvars_ = o.nvars_;
        else throw std::invalid_argument("variable-count mismatch");
    }
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ && !terms_.empty() && !o.terms_.empty())
        throw std::invalid_argument("variable-count mismatch");
    MultiPoly r(std::max(nvars_, o.nvars_));
    ExpVec e(r.nvars(), 0);
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) {
            for (int i = 0; i < r.nvars(); ++i) e[i] = e1[i] + e2[i];
            r.add_term(e, c1 * c2);
        }
    return r;
}

MultiPoly MultiPoly::operator*(const Rational& c) const {
    MultiPoly r(nvars_);
    if (daha::is_zero(c)) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

MultiPoly MultiPoly::derivative(int i) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[i - 1] == 0) continue;
        ExpVec ne = e;
        ne[i - 1] -= 1;
        r.add_term(ne, c * e[i - 1]);
    }
    return r;
}

MultiPoly MultiPoly::permute(const std::vector<int>& sigma) const {
    MultiPoly r(nvars_);
    ExpVec ne(nvars_);
    for (const auto& [e, c] : terms_) {
        std::fill(ne.begin(), ne.end(), 0);
        for (int i = 0; i < nvars_; ++i) ne[sigma[i]] = e[i];
        r.add_term(ne, c);
    }
    return r;
}

MultiPoly MultiPoly::substitute_zero(int i) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[i - 1] == 0) r.add_term(e, c);
    return r;
}

MultiPoly MultiPoly::shift_all(const Rational& c) const {
    // substitute x_i -> x_i + c; expand binomially
    MultiPoly r(nvars_);
    for (const auto& [e, coef] : terms_) {
        MultiPoly term = MultiPoly::constant(nvars_, coef);
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            MultiPoly base = MultiPoly::variable(nvars_, i + 1) + MultiPoly::constant(nvars_, c);
            for (int k = 0; k < e[i]; ++k) term = term * base;
        }
        r += term;
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) os << (sgn(c) >= 0 ? " + " : " - ");
        else if (sgn(c) < 0) os << "-";
        Rational a = abs(c);
        bool printed = false;
        if (a != 1) { os << rat_to_string(a); printed = true; }
        for (int i = 0; i < nvars_; ++i) {
            if (e[i] == 0) continue;
            if (printed) os << "*";
            os << "x" << (i + 1);
            if (e[i] > 1) os << "^" << e[i];
            printed = true;
        }
        if (!printed) os << rat_to_string(a);
        first = false;
    }
    return os.str();
}

MultiPoly divided_difference(const MultiPoly& f, int i, int j) {
    if (i == j) throw std::invalid_argument("divided_difference: i == j");
    int n = f.nvars();
    std::vector<int> sigma(n);
    for (int k = 0; k < n; ++k) sigma[k] = k;
    std::swap(sigma[i - 1], sigma[j - 1]);
    MultiPoly num = f.permute(sigma) - f;
    if (num.is_zero()) return MultiPoly(n);
    // divide by x_a - x_b with a the smaller index so leading terms always
    // carry positive x_a exponent (graded-lex is multiplicative)
    int a = std::min(i, j), b = std::max(i, j);
    Rational s = (a == i) ? Rational(1) : Rational(-1);
    MultiPoly quot(n);
    ExpVec qe(n);
    while (!num.is_zero()) {
        const auto& [le, lc] = *num.terms().begin();
        if (le[a - 1] == 0)
            throw std::logic_error("divided_difference: inexact division (internal defect)");
        qe = le;
        qe[a - 1] -= 1;
        // num -= lc * x^qe * (x_a - x_b)
        MultiPoly t = MultiPoly::monomial(qe, lc);
        quot.add_term(qe, lc);
        num -= t * (MultiPoly::variable(n, a) - MultiPoly::variable(n, b));
    }
    return quot * s;
}

MultiPoly permute(const std::vector<int>& sigma, const MultiPoly& f) {
    if ((int)sigma.size() != f.nvars())
        throw std::invalid_argument("permute: variable-count mismatch");
    return f.permute(sigma);
}

MultiPoly elementary_symmetric(const std::vector<MultiPoly>& vars, int k) {
    if (vars.empty()) throw std::invalid_argument("elementary_symmetric: no variables");
    int n = vars[0].nvars();
    int m = (int)vars.size();
    if (k < 0 || k > m) return MultiPoly(n);
    // dp over prod (1 + t v_i), keep coefficients of t^0..t^k
    std::vector<MultiPoly> dp(k + 1, MultiPoly(n));
    dp[0] = MultiPoly::constant(n, 1);
    for (int i = 0; i < m; ++i)
        for (int d = std::min(k, i + 1); d >= 1; --d)
            dp[d] += dp[d - 1] * vars[i];
    return dp[k];
}

MultiPoly power_sum(int nvars, int k) {
    MultiPoly r(nvars);
    if (k == 0) return MultiPoly::constant(nvars, nvars);
    for (int i = 1; i <= nvars; ++i) {
        ExpVec e(nvars, 0);
        e[i - 1] = k;
        r.add_term(e, 1);
    }
    return r;
}

std::vector<MultiPoly> centered_variables(int nvars) {
    MultiPoly mean(nvars);
    for (int i = 1; i <= nvars; ++i) mean += MultiPoly::variable(nvars, i);
    mean = mean * Rational(1, nvars);
    std::vector<MultiPoly> out;
    for (int i = 1; i <= nvars; ++i) out.push_back(MultiPoly::variable(nvars, i) - mean);
    return out;
}

MultiPoly vandermonde(int nvars) {
    MultiPoly w = MultiPoly::constant(nvars, 1);
    for (int i = 1; i <= nvars; ++i)
        for (int j = i + 1; j <= nvars; ++j)
            w = w * (MultiPoly::variable(nvars, i) - MultiPoly::variable(nvars, j));
    return w;
}

bool is_translation_invariant(const MultiPoly& f) {
    return f.shift_all(Rational(1)) == f;
}

}  // namespace daha
