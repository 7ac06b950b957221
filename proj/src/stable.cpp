#include "daha/stable.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace daha {

StableAlgebra::StableAlgebra(int n, int qmax) : n_(n), qmax_(qmax) {
    if (n < 2) throw std::invalid_argument("StableAlgebra: n >= 2");
    if (qmax <= 0) throw std::invalid_argument("StableAlgebra: qmax must be positive");
    // enumerate u exponent vectors with sum (2i+2) b_i <= qmax, then attach
    // xi subsets while the q-grading stays within qmax
    std::vector<std::vector<int>> upows;
    std::vector<int> cur(n - 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 1) {
            upows.push_back(cur);
            return;
        }
        int w = 2 * (pos + 1) + 2;
        for (int b = 0; b * w <= left; ++b) {
            cur[pos] = b;
            rec(pos + 1, left - b * w);
        }
        cur[pos] = 0;
    };
    rec(0, qmax);
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        int qxi = 0;
        for (int i = 1; i < n; ++i)
            if (mask & (1u << (i - 1))) qxi += 2 * i;
        for (const auto& b : upows) {
            int q = qxi;
            for (int i = 1; i < n; ++i) q += (2 * i + 2) * b[i - 1];
            if (q <= qmax) monos_.push_back({mask, b});
        }
    }
    std::sort(monos_.begin(), monos_.end());
    for (size_t i = 0; i < monos_.size(); ++i) index_[monos_[i]] = i;
}

std::array<int, 3> StableAlgebra::grading(const Monomial& mono) const {
    int a = 0, q = 0, t = 0;
    for (int i = 1; i < n_; ++i) {
        if (mono.mask & (1u << (i - 1))) {
            a += 2;
            q += 2 * i;
            t += 2 * i + 1;
        }
        q += (2 * i + 2) * mono.upow[i - 1];
        t += 2 * i * mono.upow[i - 1];
    }
    return {a, q, t};
}

TriplyGraded StableAlgebra::poincare() const {
    TriplyGraded out;
    for (const auto& m : monos_) {
        auto g = grading(m);
        out.add(g[0], g[1], g[2], 1);
    }
    return out;
}

std::map<std::vector<int>, long> stable_d_xi(int n, int N, int k, bool reduced) {
    std::map<std::vector<int>, long> out;
    if (N < 1) throw std::invalid_argument("stable_d_xi: N >= 1");
    std::vector<int> expo(n, 0);  // slot 0 counts u_0 in the unreduced variant
    std::function<void(int, int)> rec = [&](int parts_left, int sum_left) {
        if (parts_left == 0) {
            if (sum_left == 0) out[expo] += 1;
            return;
        }
        int lo = reduced ? 1 : 0;
        for (int j = lo; j <= std::min(sum_left, n - 1); ++j) {
            if (j > 0 && j > n - 1) break;
            expo[j] += 1;
            rec(parts_left - 1, sum_left - j);
            expo[j] -= 1;
        }
    };
    rec(N, k);
    return out;
}

std::map<StableAlgebra::Monomial, Rational> StableAlgebra::apply_dn(int N, const Monomial& mono,
                                                                    bool reduced) const {
    std::map<Monomial, Rational> out;
    int pos = 0;
    for (int r = 1; r < n_; ++r) {
        if (!(mono.mask & (1u << (r - 1)))) continue;
        int sign = (pos % 2 == 0) ? 1 : -1;
        ++pos;
        for (const auto& [expo, mult] : stable_d_xi(n_, N, r, reduced)) {
            if (!reduced && expo[0] > 0)
                throw std::logic_error("apply_dn: u_0 appears in a reduced computation");
            Monomial img{mono.mask & ~(1u << (r - 1)), mono.upow};
            for (int i = 1; i < n_; ++i) img.upow[i - 1] += expo[i];
            auto it = out.find(img);
            Rational add = Rational(sign) * Rational(mult);
            if (it == out.end()) out.emplace(std::move(img), add);
            else {
                it->second += add;
                if (is_zero(it->second)) out.erase(it);
            }
        }
    }
    return out;
}

TriplyGraded StableAlgebra::homology(int N, int qbound) const {
    if (qbound + 2 * N > qmax_)
        throw std::invalid_argument("StableAlgebra::homology: qmax too small for qbound");
    // group monomials by (a, q, t)
    std::map<std::array<int, 3>, std::vector<size_t>> blocks;
    for (size_t i = 0; i < monos_.size(); ++i) blocks[grading(monos_[i])].push_back(i);

    auto block_of = [&](const std::array<int, 3>& g) -> const std::vector<size_t>* {
        auto it = blocks.find(g);
        return it == blocks.end() ? nullptr : &it->second;
    };
    auto dmatrix = [&](const std::array<int, 3>& g) -> QMat {
        // d_N from block g to block g' = (a-2, q+2N, t-1)
        const auto* src = block_of(g);
        std::array<int, 3> g2{g[0] - 2, g[1] + 2 * N, g[2] - 1};
        const auto* dst = block_of(g2);
        if (!src) return QMat(dst ? dst->size() : 0, 0);
        QMat m(dst ? dst->size() : 0, src->size());
        if (!dst) return m;
        std::map<size_t, size_t> dpos;
        for (size_t r = 0; r < dst->size(); ++r) dpos[(*dst)[r]] = r;
        for (size_t c = 0; c < src->size(); ++c) {
            for (const auto& [img, coef] : apply_dn(N, monos_[(*src)[c]])) {
                auto it = index_.find(img);
                if (it == index_.end()) continue;  // beyond truncation: outside block anyway
                auto rp = dpos.find(it->second);
                if (rp == dpos.end()) throw std::logic_error("stable homology: grading mismatch");
                m.at(rp->second, c) = coef;
            }
        }
        return m;
    };

    TriplyGraded out;
    for (const auto& [g, members] : blocks) {
        if (g[1] > qbound) continue;
        size_t rank_out = rank(dmatrix(g));
        std::array<int, 3> gin{g[0] + 2, g[1] - 2 * N, g[2] + 1};
        size_t rank_in = block_of(gin) ? rank(dmatrix(gin)) : 0;
        long h = (long)members.size() - (long)rank_out - (long)rank_in;
        if (h < 0) throw std::logic_error("stable homology: negative dimension");
        if (h > 0) out.add(g[0], g[1], g[2], h);
    }
    return out;
}

std::map<std::pair<int, int>, long long> sl_collapse(const TriplyGraded& h, int N) {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [k, c] : h.terms()) {
        auto key = std::make_pair(k[1] + N * k[0], k[2]);
        out[key] += c;
        if (out[key] == 0) out.erase(key);
    }
    return out;
}

namespace {
// coefficients of p_k in the e-basis (Newton): p_k = sum a_k(lambda) e_lambda
std::map<Partition, Rational> p_in_e_coeffs(int k) {
    SymFunc p = to_basis(SymFunc::p(k), SFBasis::Elementary);
    std::map<Partition, Rational> out;
    for (const auto& [lam, c] : p.coef()) {
        Rational r;
        if (!c.is_rational_constant(r)) throw std::logic_error("p_in_e: non-constant");
        out[lam] = r;
    }
    return out;
}

Rational f_n_lambda(int n, const Partition& lam) {
    Rational f = 1;
    for (int part : lam.parts()) {
        // (n - part)! / n! = 1 / (n (n-1) ... (n-part+1))
        Rational d = 1;
        for (int j = 0; j < part; ++j) d *= (n - j);
        f /= d;
    }
    return f;
}
}  // namespace

MultiPoly u_closed_form(int n, int k) {
    if (k + 1 > n) throw std::out_of_range("u_closed_form: k + 1 <= n required");
    auto xt = centered_variables(n);
    MultiPoly out(n);
    for (const auto& [lam, a] : p_in_e_coeffs(k + 1)) {
        if (lam.count(1) > 0) continue;  // e_1 = 0 on the reduced side
        MultiPoly term = MultiPoly::constant(n, a * f_n_lambda(n, lam));
        for (int part : lam.parts()) term = term * elementary_symmetric(xt, part);
        out += term;
    }
    return out;
}

SymFunc u_closed_form_sym(int k) {
    SymFunc out(SFBasis::Elementary);
    for (const auto& [lam, a] : p_in_e_coeffs(k + 1)) out.add_coeff(lam, QTScalar(a));
    return out;
}

MultiPoly u_full(int n, int j) {
    // -ln Ebar(z) with Ebar = sum (-1)^l (n-l)!/n! e_l z^l, honest variables;
    // u_j = (j+1) [z^{j+1}]
    std::vector<MultiPoly> xs;
    for (int i = 1; i <= n; ++i) xs.push_back(MultiPoly::variable(n, i));
    int deg = j + 1;
    std::vector<MultiPoly> ebar(deg + 1, MultiPoly(n));  // coefficients of z^0..z^deg
    for (int l = 0; l <= std::min(deg, n); ++l) {
        Rational c = (l % 2 == 0) ? 1 : -1;
        c *= f_n_lambda(n, l == 0 ? Partition() : Partition({l}));
        ebar[l] = elementary_symmetric(xs, l) * c;
    }
    // log series: -ln(1 + E') = sum_{r>=1} (-1)^r E'^r / r with E' = Ebar - 1
    std::vector<MultiPoly> eprime = ebar;
    eprime[0] = MultiPoly(n);
    std::vector<MultiPoly> acc(deg + 1, MultiPoly(n));  // -ln Ebar truncated
    std::vector<MultiPoly> pw(deg + 1, MultiPoly(n));
    pw[0] = MultiPoly::constant(n, 1);
    for (int r = 1; r <= deg; ++r) {
        // pw = eprime^r truncated
        std::vector<MultiPoly> next(deg + 1, MultiPoly(n));
        for (int a = 0; a <= deg; ++a) {
            if (pw[a].is_zero()) continue;
            for (int b = 1; a + b <= deg; ++b) {
                if (eprime[b].is_zero()) continue;
                next[a + b] += pw[a] * eprime[b];
            }
        }
        pw = std::move(next);
        Rational c = Rational((r % 2 == 0) ? -1 : 1) / r;  // -(-1)^r / r
        for (int a = 0; a <= deg; ++a) acc[a] += pw[a] * (-c);
    }
    return acc[deg] * Rational(j + 1);
}

PolyForm xi_from_u(int n, int i) {
    MultiPoly u = u_closed_form(n, i);
    std::vector<MultiPoly> vals;
    for (int l = 1; l <= n; ++l) vals.push_back(u.derivative(l) * Rational(1, i + 1));
    return PolyForm::one_form(std::move(vals));
}

MultiPoly del_plus1(const PolyForm& phi) {
    if (phi.k != 1) throw std::invalid_argument("del_plus1: one-forms only");
    MultiPoly out(phi.nvars);
    for (const auto& [s, p] : phi.comp)
        out += p * MultiPoly::variable(phi.nvars, s[0] + 1);
    return out;
}

PolyForm del_minus(const PolyForm& phi, int j) {
    // (-1)^{j+1} contraction with the tuple Dlower_i^j
    PolyForm r = contract_with(phi, [j](int i, const MultiPoly& p) {
        MultiPoly v = p;
        for (int t = 0; t < j && !v.is_zero(); ++t) v = dunkl_lower(i + 1, v);
        return v;
    });
    if (j % 2 == 0) r = r * Rational(-1);
    return r;
}

bool u_characterization_check(int n, int k) {
    MultiPoly u = u_closed_form(n, k);
    for (int i = 1; i <= n; ++i) {
        MultiPoly got = op_hamiltonian_limit(n, i, u);
        if (i == k + 1) {
            if (got != MultiPoly::constant(n, -(k + 1))) return false;
        } else {
            if (!got.is_zero()) return false;
        }
    }
    return true;
}

bool xi_characterization_check(int n, int i) {
    PolyForm xi = xi_from_u(n, i);
    for (int j = 1; j < i; ++j)
        if (!del_minus(xi, j).is_zero()) return false;
    PolyForm top = del_minus(xi, i);
    if (!(top.at({}) == MultiPoly::constant(n, -1))) return false;
    // del_1 xi_i = u_i
    return del_plus1(xi) == u_closed_form(n, i);
}

bool a1_star_identity(int n, int k) {
    // componentwise identity x_i (xi_k)_i = -delta_{0k} + (n-k-1)(xi_{k+1})_i
    //                                      + sum_{j=0}^{k} u_j (xi_{k-j})_i
    // in full variables, with u_j from the generating function (u_0 = e_1/n)
    std::vector<MultiPoly> u(k + 2, MultiPoly(n));
    for (int j = 0; j <= k + 1; ++j) u[j] = u_full(n, j);
    auto xi_of = [&](int j) {
        std::vector<MultiPoly> vals;
        for (int l = 1; l <= n; ++l) vals.push_back(u[j].derivative(l) * Rational(1, j + 1));
        return vals;
    };
    std::vector<std::vector<MultiPoly>> xi(k + 2);
    for (int j = 0; j <= k + 1; ++j) xi[j] = xi_of(j);
    for (int i = 1; i <= n; ++i) {
        MultiPoly lhs = MultiPoly::variable(n, i) * xi[k][i - 1];
        MultiPoly rhs(n);
        if (k == 0) rhs -= MultiPoly::constant(n, 1);
        rhs += xi[k + 1][i - 1] * Rational(n - k - 1);
        for (int j = 0; j <= k; ++j) rhs += u[j] * xi[k - j][i - 1];
        if (lhs != rhs) return false;
    }
    return true;
}

PolyForm nabla_plain(const PolyForm& phi) {
    PolyForm r = PolyForm::zero_form(phi.nvars, phi.k + 1);
    for (const auto& [s, p] : phi.comp)
        for (int i = 0; i < phi.nvars; ++i) {
            if (std::find(s.begin(), s.end(), i) != s.end()) continue;
            MultiPoly v = p.derivative(i + 1);
            if (v.is_zero()) continue;
            std::vector<int> merged = s;
            merged.push_back(i);
            std::sort(merged.begin(), merged.end());
            int pos = (int)(std::find(merged.begin(), merged.end(), i) - merged.begin());
            r.add(merged, v * Rational(pos % 2 == 0 ? 1 : -1));
        }
    return r;
}

PolyForm w_top_form(int n) {
    // the sign-isotypic top form: contract W x_1^* ^ ... ^ x_n^* with 1_h
    MultiPoly w = vandermonde(n);
    PolyForm phi = PolyForm::zero_form(n, n - 1);
    for (int j = 0; j < n; ++j) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (i != j) s.push_back(i);
        phi.add(s, w * Rational(j % 2 == 0 ? 1 : -1));
    }
    return phi;
}

bool nabla_w_check(int n) {
    // nabla kills every del_{-I}-derivative of the W top form
    std::function<bool(const PolyForm&, int)> walk = [&](const PolyForm& phi, int next) {
        if (!nabla_plain(phi).is_zero()) return false;
        if (phi.k == 0) return true;
        for (int j = next; j < n; ++j)
            if (!walk(del_minus(phi, j), j + 1)) return false;
        return true;
    };
    return walk(w_top_form(n), 1);
}

}  // namespace daha
