#include "daha/symfunc.hpp"

#include <atomic>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace daha {

namespace {
std::atomic<int> g_degree_cap{10};

void check_cap(const Partition& mu) {
    if (mu.size() > g_degree_cap.load())
        throw std::runtime_error("symfunc degree cap exceeded (" + std::to_string(mu.size()) +
                                 " > " + std::to_string(g_degree_cap.load()) + ")");
}

Partition merge_parts(const Partition& a, const Partition& b) {
    std::vector<int> v = a.parts();
    v.insert(v.end(), b.parts().begin(), b.parts().end());
    std::sort(v.rbegin(), v.rend());
    return Partition(std::move(v));
}
}  // namespace

int symfunc_degree_cap() { return g_degree_cap.load(); }
void set_symfunc_degree_cap(int cap) { g_degree_cap.store(cap); }

SymFunc SymFunc::p(int k) {
    SymFunc f(SFBasis::Power);
    f.set_coeff(Partition({k}), QTScalar(1));
    return f;
}

SymFunc SymFunc::e(int k) {
    SymFunc f(SFBasis::Elementary);
    f.set_coeff(Partition({k}), QTScalar(1));
    return f;
}

SymFunc SymFunc::h(int k) {
    SymFunc f(SFBasis::Homogeneous);
    f.set_coeff(Partition({k}), QTScalar(1));
    return f;
}

SymFunc SymFunc::s(const Partition& lam) {
    SymFunc f(SFBasis::Schur);
    f.set_coeff(lam, QTScalar(1));
    return f;
}

SymFunc SymFunc::one(SFBasis b) {
    SymFunc f(b);
    f.set_coeff(Partition(), QTScalar(1));
    return f;
}

QTScalar SymFunc::coeff(const Partition& mu) const {
    auto it = coef_.find(mu);
    return it == coef_.end() ? QTScalar(0) : it->second;
}

void SymFunc::set_coeff(const Partition& mu, const QTScalar& c) {
    if (c.is_zero()) coef_.erase(mu);
    else coef_[mu] = c;
}

void SymFunc::add_coeff(const Partition& mu, const QTScalar& c) {
    auto it = coef_.find(mu);
    if (it == coef_.end()) {
        if (!c.is_zero()) coef_.emplace(mu, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) coef_.erase(it);
    }
}

SymFunc SymFunc::operator+(const SymFunc& o) const {
    if (basis_ != o.basis_) return to_basis(*this, SFBasis::Power) + to_basis(o, SFBasis::Power);
    SymFunc r = *this;
    for (const auto& [mu, c] : o.coef_) r.add_coeff(mu, c);
    return r;
}

SymFunc SymFunc::operator-(const SymFunc& o) const {
    return *this + o * QTScalar(-1);
}

SymFunc SymFunc::operator*(const QTScalar& c) const {
    SymFunc r(basis_);
    if (c.is_zero()) return r;
    for (const auto& [mu, k] : coef_) r.coef_[mu] = k * c;
    return r;
}

SymFunc SymFunc::operator*(const SymFunc& o) const {
    // multiplicative bases multiply by concatenation; Schur goes through p
    if (basis_ != o.basis_)
        return to_basis(*this, SFBasis::Power) * to_basis(o, SFBasis::Power);
    if (basis_ == SFBasis::Schur) {
        SymFunc prod = to_basis(*this, SFBasis::Power) * to_basis(o, SFBasis::Power);
        return to_basis(prod, SFBasis::Schur);
    }
    SymFunc r(basis_);
    for (const auto& [mu, c] : coef_)
        for (const auto& [nu, d] : o.coef_) r.add_coeff(merge_parts(mu, nu), c * d);
    return r;
}

bool SymFunc::operator==(const SymFunc& o) const {
    SymFunc a = to_basis(*this, SFBasis::Schur);
    SymFunc b = to_basis(o, SFBasis::Schur);
    return a.coef_ == b.coef_;
}

std::string SymFunc::to_string() const {
    const char* tag = basis_ == SFBasis::Power ? "p"
                      : basis_ == SFBasis::Elementary ? "e"
                      : basis_ == SFBasis::Homogeneous ? "h" : "s";
    if (coef_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, c] : coef_) {
        if (!first) os << " + ";
        os << "(" << c.to_string() << ")*" << tag << mu.to_string();
        first = false;
    }
    return os.str();
}

// ---- conversions, all through the power-sum hub ----

namespace {
std::mutex conv_mutex;
std::map<int, std::map<Partition, Rational>> e_in_p_memo;  // e_k in p-basis
std::map<int, std::map<Partition, Rational>> h_in_p_memo;
std::map<int, std::map<Partition, Rational>> p_in_e_memo;  // p_k in e-basis
std::map<int, std::map<Partition, Rational>> p_in_h_memo;

// multiply a rational-coefficient expansion (keyed by partitions) by p_i or e_i
std::map<Partition, Rational> shift_by_part(const std::map<Partition, Rational>& f, int i) {
    std::map<Partition, Rational> r;
    for (const auto& [mu, c] : f) r[merge_parts(mu, Partition({i}))] += c;
    return r;
}

// e_k expanded in power sums: k e_k = sum_{i=1}^{k} (-1)^{i-1} p_i e_{k-i}
const std::map<Partition, Rational>& e_in_p(int k) {
    auto it = e_in_p_memo.find(k);
    if (it != e_in_p_memo.end()) return it->second;
    std::map<Partition, Rational> r;
    if (k == 0) {
        r[Partition()] = 1;
    } else {
        for (int i = 1; i <= k; ++i) {
            Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
            for (const auto& [mu, c] : shift_by_part(e_in_p(k - i), i)) {
                r[mu] += sign * c / k;
                if (is_zero(r[mu])) r.erase(mu);
            }
        }
    }
    return e_in_p_memo.emplace(k, std::move(r)).first->second;
}

// h_k in power sums: k h_k = sum_{i=1}^{k} p_i h_{k-i}
const std::map<Partition, Rational>& h_in_p(int k) {
    auto it = h_in_p_memo.find(k);
    if (it != h_in_p_memo.end()) return it->second;
    std::map<Partition, Rational> r;
    if (k == 0) {
        r[Partition()] = 1;
    } else {
        for (int i = 1; i <= k; ++i)
            for (const auto& [mu, c] : shift_by_part(h_in_p(k - i), i)) {
                r[mu] += c / k;
                if (is_zero(r[mu])) r.erase(mu);
            }
    }
    return h_in_p_memo.emplace(k, std::move(r)).first->second;
}

// p_k in e-basis via Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k
const std::map<Partition, Rational>& p_in_e(int k) {
    auto it = p_in_e_memo.find(k);
    if (it != p_in_e_memo.end()) return it->second;
    std::map<Partition, Rational> r;
    if (k == 0) {
        r[Partition()] = 1;
    } else {
        for (int i = 1; i <= k - 1; ++i) {
            Rational sign = (i % 2 == 1) ? Rational(1) : Rational(-1);
            for (const auto& [mu, c] : shift_by_part(p_in_e(k - i), i)) {
                r[mu] += sign * c;
                if (is_zero(r[mu])) r.erase(mu);
            }
        }
        Rational sign = (k % 2 == 1) ? Rational(k) : Rational(-k);
        r[Partition({k})] += sign;
        if (is_zero(r[Partition({k})])) r.erase(Partition({k}));
    }
    return p_in_e_memo.emplace(k, std::move(r)).first->second;
}

// p_k in h-basis: p_k = k h_k - sum_{i=1}^{k-1} h_i p_{k-i}
const std::map<Partition, Rational>& p_in_h(int k) {
    auto it = p_in_h_memo.find(k);
    if (it != p_in_h_memo.end()) return it->second;
    std::map<Partition, Rational> r;
    if (k == 0) {
        r[Partition()] = 1;
    } else {
        r[Partition({k})] = k;
        for (int i = 1; i <= k - 1; ++i)
            for (const auto& [mu, c] : shift_by_part(p_in_h(k - i), i)) {
                r[mu] -= c;
                if (is_zero(r[mu])) r.erase(mu);
            }
    }
    return p_in_h_memo.emplace(k, std::move(r)).first->second;
}

// expand a product over parts of mu of single-part expansions
std::map<Partition, Rational> expand_parts(const Partition& mu,
                                           const std::map<Partition, Rational>& (*single)(int)) {
    std::map<Partition, Rational> acc;
    acc[Partition()] = 1;
    for (int part : mu.parts()) {
        std::map<Partition, Rational> next;
        const auto& s = single(part);
        for (const auto& [nu, c] : acc)
            for (const auto& [rho, d] : s) {
                next[merge_parts(nu, rho)] += c * d;
            }
        for (auto it = next.begin(); it != next.end();)
            it = is_zero(it->second) ? next.erase(it) : std::next(it);
        acc = std::move(next);
    }
    return acc;
}

SymFunc convert_multiplicative(const SymFunc& f, SFBasis target,
                               const std::map<Partition, Rational>& (*single)(int)) {
    SymFunc out(target);
    for (const auto& [mu, c] : f.coef()) {
        check_cap(mu);
        std::lock_guard<std::mutex> lk(conv_mutex);
        for (const auto& [nu, d] : expand_parts(mu, single))
            out.add_coeff(nu, c * QTScalar(d));
    }
    return out;
}

SymFunc p_to_schur(const SymFunc& f) {
    SymFunc out(SFBasis::Schur);
    for (const auto& [mu, c] : f.coef()) {
        check_cap(mu);
        for (const auto& lam : all_partitions(mu.size()))
            out.add_coeff(lam, c * QTScalar((long)sn_character(lam, mu)));
    }
    return out;
}

SymFunc schur_to_p(const SymFunc& f) {
    SymFunc out(SFBasis::Power);
    for (const auto& [lam, c] : f.coef()) {
        check_cap(lam);
        for (const auto& mu : all_partitions(lam.size())) {
            Rational w = Rational((long)sn_character(lam, mu)) / Rational(z_mu(mu));
            out.add_coeff(mu, c * QTScalar(w));
        }
    }
    return out;
}
}  // namespace

SymFunc to_basis(const SymFunc& f, SFBasis target) {
    if (f.basis() == target) return f;
    switch (f.basis()) {
        case SFBasis::Power:
            switch (target) {
                case SFBasis::Schur: return p_to_schur(f);
                case SFBasis::Elementary: return convert_multiplicative(f, target, p_in_e);
                case SFBasis::Homogeneous: return convert_multiplicative(f, target, p_in_h);
                default: break;
            }
            break;
        case SFBasis::Elementary:
            return to_basis(convert_multiplicative(f, SFBasis::Power, e_in_p), target);
        case SFBasis::Homogeneous:
            return to_basis(convert_multiplicative(f, SFBasis::Power, h_in_p), target);
        case SFBasis::Schur:
            return to_basis(schur_to_p(f), target);
    }
    throw std::logic_error("to_basis: unhandled conversion");
}

QTScalar hall_pairing(const SymFunc& f, const SymFunc& g) {
    SymFunc a = to_basis(f, SFBasis::Power);
    SymFunc b = to_basis(g, SFBasis::Power);
    QTScalar s(0);
    for (const auto& [mu, c] : a.coef()) {
        QTScalar d = b.coeff(mu);
        if (d.is_zero()) continue;
        s += c * d * QTScalar(Rational(z_mu(mu)));
    }
    return s;
}

SymFunc omega(const SymFunc& f) {
    SymFunc a = to_basis(f, SFBasis::Power);
    SymFunc out(SFBasis::Power);
    for (const auto& [mu, c] : a.coef()) {
        int sign = ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
        out.add_coeff(mu, c * QTScalar((long)sign));
    }
    return to_basis(out, f.basis());
}

SymFunc phi_substitution(const SymFunc& f, PhiKind which) {
    SymFunc a = to_basis(f, SFBasis::Power);
    SymFunc out(SFBasis::Power);
    for (const auto& [mu, c] : a.coef()) {
        QTScalar factor(1);
        for (int part : mu.parts()) {
            QTPoly one(1);
            QTPoly qk = QTPoly::monomial(part, 0);
            QTPoly tk = QTPoly::monomial(0, part);
            switch (which) {
                case PhiKind::OneMinusQ: factor *= QTScalar(one - qk); break;
                case PhiKind::InvOneMinusQ: factor *= QTScalar(one, one - qk); break;
                case PhiKind::OneMinusT: factor *= QTScalar(one - tk); break;
                case PhiKind::InvOneMinusT: factor *= QTScalar(one, one - tk); break;
            }
        }
        out.add_coeff(mu, c * factor);
    }
    return out;
}

QLaurent exterior_generating_eval(const SymFunc& ch) {
    SymFunc a = to_basis(ch, SFBasis::Power);
    QLaurent acc;
    for (const auto& [mu, c] : a.coef()) {
        Rational r;
        if (!c.is_rational_constant(r))
            throw std::invalid_argument("exterior_generating_eval: non-constant coefficient");
        QLaurent term = QLaurent::monomial(0, r);
        for (int part : mu.parts()) {
            QLaurent f = QLaurent::monomial(0, Rational(1)) - QLaurent::monomial(part, Rational(1));
            term = term * f;
        }
        acc += term;
    }
    QLaurent one_minus_u = QLaurent::monomial(0, Rational(1)) - QLaurent::monomial(1, Rational(1));
    return acc.divide_exact(one_minus_u);
}

SymFunc frobenius_from_traces(int n, const std::map<Partition, Rational>& traces) {
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    SymFunc out(SFBasis::Power);
    for (const auto& [mu, tr] : traces) {
        if (mu.size() != n) throw std::invalid_argument("frobenius_from_traces: bad cycle type");
        Rational w = tr * Rational(class_size(mu)) / Rational(fact);
        out.add_coeff(mu, QTScalar(w));
    }
    return out;
}

}  // namespace daha
