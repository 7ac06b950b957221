#include "daha/characters.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace daha {

void HomflyPoly::add(int a, int q, long long c) {
    if (c == 0) return;
    auto key = std::make_pair(a, q);
    auto it = coef_.find(key);
    if (it == coef_.end()) coef_.emplace(key, c);
    else {
        it->second += c;
        if (it->second == 0) coef_.erase(it);
    }
}

HomflyPoly HomflyPoly::operator-(const HomflyPoly& o) const {
    HomflyPoly r = *this;
    for (const auto& [k, c] : o.coef_) r.add(k.first, k.second, -c);
    return r;
}

QLaurent HomflyPoly::specialize_a(int N) const {
    QLaurent r;
    for (const auto& [k, c] : coef_)
        r += QLaurent::monomial(k.second + N * k.first, Rational((long)c));
    return r;
}

HomflyPoly HomflyPoly::shift(int da, int dq) const {
    HomflyPoly r;
    for (const auto& [k, c] : coef_) r.add(k.first - da, k.second - dq, c);
    return r;
}

int HomflyPoly::min_a() const {
    if (coef_.empty()) throw std::logic_error("min_a of zero");
    int v = coef_.begin()->first.first;
    for (const auto& [k, c] : coef_) v = std::min(v, k.first);
    return v;
}

int HomflyPoly::max_a() const {
    if (coef_.empty()) throw std::logic_error("max_a of zero");
    int v = coef_.begin()->first.first;
    for (const auto& [k, c] : coef_) v = std::max(v, k.first);
    return v;
}

std::string HomflyPoly::to_string() const {
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : coef_) {
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        long long ab = c > 0 ? c : -c;
        bool printed = false;
        if (ab != 1 || (k.first == 0 && k.second == 0)) {
            os << ab;
            printed = true;
        }
        if (k.first != 0) {
            if (printed) os << "*";
            os << "a";
            if (k.first != 1) os << "^" << k.first;
            printed = true;
        }
        if (k.second != 0) {
            if (printed) os << "*";
            os << "q";
            if (k.second != 1) os << "^" << k.second;
        }
        first = false;
    }
    return os.str();
}

HomflyPoly homfly_torus_closed(int m, int n) {
    if (std::gcd(m, n) != 1) throw std::invalid_argument("homfly_torus_closed: gcd(m,n) != 1");
    int mu = (m - 1) * (n - 1);
    HomflyPoly out;
    for (int k = 0; k < n && k < m; ++k) {
        QLaurent num = q_factorial(m + n - k - 1);
        QLaurent den = q_integer(m) * q_integer(n) * q_factorial(k) *
                       q_factorial(n - k - 1) * q_factorial(m - k - 1);
        QLaurent mult = num.divide_exact(den);
        for (const auto& [e, c] : mult.terms()) {
            if (c.get_den() != 1)
                throw std::logic_error("homfly_torus_closed: non-integer multiplicity");
            long long v = c.get_num().get_si();
            out.add(mu + 2 * k, e, (k % 2 == 0) ? v : -v);
        }
    }
    return out;
}

HomflyPoly homfly_from_rep(const FiniteRep& rep) {
    int mu = rep.mu();
    HomflyPoly out;
    for (int k = 0; k < rep.n(); ++k) {
        Partition hook = hook_partition(rep.n(), k);
        for (int d = 0; d <= rep.top_degree(); ++d) {
            long mult = rep.isotypic_mult(hook, d);
            if (mult == 0) continue;
            out.add(mu + 2 * k, 2 * d - mu, (k % 2 == 0) ? mult : -mult);
        }
    }
    return out;
}

QLaurent trace_formula_closed(int m, int n, const Partition& type) {
    if (type.size() != n) throw std::invalid_argument("trace_formula_closed: bad cycle type");
    auto one_minus_qk = [](int k) {
        return QLaurent::monomial(0) - QLaurent::monomial(k);
    };
    QLaurent num = one_minus_qk(1);
    QLaurent den = one_minus_qk(m);
    for (int part : type.parts()) {
        num = num * one_minus_qk(m * part);
        den = den * one_minus_qk(part);
    }
    QLaurent shifted = num.divide_exact(den);
    // multiply by q^{-delta}
    QLaurent out;
    int delta = (m - 1) * (n - 1) / 2;
    for (const auto& [e, c] : shifted.terms()) out += QLaurent::monomial(e - delta, c);
    return out;
}

QLaurent graded_trace(const FiniteRep& rep, const Partition& type) {
    QLaurent out;
    int delta = rep.delta();
    for (int d = 0; d <= rep.top_degree(); ++d)
        out += QLaurent::monomial(d - delta, rep.trace(type, d));
    return out;
}

QLaurent reflection_det(const Partition& type) {
    QLaurent num = QLaurent::monomial(0);
    for (int part : type.parts())
        num = num * (QLaurent::monomial(0) - QLaurent::monomial(part));
    return num.divide_exact(QLaurent::monomial(0) - QLaurent::monomial(1));
}

}  // namespace daha
