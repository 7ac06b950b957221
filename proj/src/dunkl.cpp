#include "daha/dunkl.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace daha {

DunklContext::DunklContext(int n_, const Rational& c_) : n(n_), c(c_) {
    if (n < 2) throw std::invalid_argument("DunklContext: need n >= 2");
    c.canonicalize();
}

DunklContext DunklContext::for_rep(int m, int n) {
    if (m <= 0) throw std::invalid_argument("for_rep: m must be positive");
    if (n < 2) throw std::invalid_argument("for_rep: n must be >= 2");
    if (std::gcd(m, n) != 1)
        throw std::invalid_argument("for_rep: gcd(m, n) must be 1");
    return DunklContext(n, Rational(m, n));
}

MultiPoly dunkl_apply(const DunklContext& ctx, int i, const MultiPoly& f) {
    if (i < 1 || i > ctx.n) throw std::out_of_range("dunkl_apply: index");
    MultiPoly r = f.derivative(i);
    if (!is_zero(ctx.c)) {
        MultiPoly dd(f.nvars());
        for (int j = 1; j <= ctx.n; ++j) {
            if (j == i) continue;
            dd += divided_difference(f, i, j);
        }
        r += dd * ctx.c;
    }
    return r;
}

MultiPoly dunkl_lower(int i, const MultiPoly& f) {
    MultiPoly r(f.nvars());
    for (int j = 1; j <= f.nvars(); ++j) {
        if (j == i) continue;
        r += divided_difference(f, i, j);
    }
    return r;
}

std::vector<ExpVec> diff_exponents(int n, int d) {
    std::vector<ExpVec> out;
    ExpVec cur(n - 1, 0);
    // enumerate compositions of d into n-1 parts
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == n - 2) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (int v = left; v >= 0; --v) {
            cur[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    if (n >= 2) rec(0, d);
    std::sort(out.begin(), out.end(), GradedLexGreater{});
    return out;
}

MultiPoly expand_diff_monomial(int n, const ExpVec& beta) {
    MultiPoly r = MultiPoly::constant(n, 1);
    MultiPoly xn = MultiPoly::variable(n, n);
    for (int i = 0; i < n - 1; ++i) {
        if (beta[i] == 0) continue;
        MultiPoly base = MultiPoly::variable(n, i + 1) - xn;
        for (int k = 0; k < beta[i]; ++k) r = r * base;
    }
    return r;
}

std::vector<MultiPoly> basis_R(int n, int d) {
    std::vector<MultiPoly> out;
    for (const auto& beta : diff_exponents(n, d)) out.push_back(expand_diff_monomial(n, beta));
    return out;
}

QVec coords_in_diff_basis(const MultiPoly& f, const std::vector<ExpVec>& monos) {
    int n = f.nvars();
    std::map<ExpVec, int> index;
    for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = (int)i;
    QVec v(monos.size(), Rational(0));
    MultiPoly red = f.substitute_zero(n);
    for (const auto& [e, c] : red.terms()) {
        ExpVec beta(e.begin(), e.end() - 1);
        auto it = index.find(beta);
        if (it == index.end())
            throw std::logic_error("coords_in_diff_basis: monomial outside basis (degree mismatch?)");
        v[it->second] = c;
    }
    return v;
}

namespace {
// shared-prefix evaluation of Phi(m_alpha) g over a batch of alphas
struct PairingWalker {
    const DunklContext& ctx;
    const std::vector<ExpVec>& rows;
    QVec out;

    PairingWalker(const DunklContext& c, const std::vector<ExpVec>& r)
        : ctx(c), rows(r), out(r.size(), Rational(0)) {}

    MultiPoly apply_delta(int i, const MultiPoly& g) const {
        // (D_i - D_n) g
        return dunkl_apply(ctx, i, g) - dunkl_apply(ctx, ctx.n, g);
    }

    // indices [lo, hi) share the exponent prefix before `var` (1-based var)
    void walk(size_t lo, size_t hi, int var, const MultiPoly& g) {
        if (g.is_zero()) return;
        if (var == ctx.n) {
            for (size_t r = lo; r < hi; ++r) out[r] = g.constant_term();
            return;
        }
        size_t pos = lo;
        MultiPoly cur = g;
        int applied = 0;
        while (pos < hi) {
            int want = rows[pos][var - 1];
            while (applied < want) {
                cur = apply_delta(var, cur);
                ++applied;
                if (cur.is_zero()) return;  // all remaining rows pair to zero
            }
            size_t end = pos;
            while (end < hi && rows[end][var - 1] == want) ++end;
            walk(pos, end, var + 1, cur);
            pos = end;
        }
    }
};
}  // namespace

QVec pairing_column(const DunklContext& ctx, const std::vector<ExpVec>& rows,
                    const MultiPoly& g) {
    // rows must be grouped by shared prefixes: sort ascending per variable,
    // remembering the original positions
    std::vector<size_t> order(rows.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](size_t a, size_t b) { return rows[a] < rows[b]; });
    std::vector<ExpVec> sorted;
    sorted.reserve(rows.size());
    for (size_t i : order) sorted.push_back(rows[i]);
    PairingWalker w(ctx, sorted);
    w.walk(0, sorted.size(), 1, g);
    QVec out(rows.size(), Rational(0));
    for (size_t i = 0; i < order.size(); ++i) out[order[i]] = w.out[i];
    return out;
}

Rational dunkl_pairing(const DunklContext& ctx, const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    if (!f.is_homogeneous() || !g.is_homogeneous())
        throw std::invalid_argument("dunkl_pairing: inputs must be homogeneous");
    if (f.degree() != g.degree()) return Rational(0);
    auto monos = diff_exponents(ctx.n, f.degree());
    QVec fc = coords_in_diff_basis(f, monos);
    std::vector<ExpVec> support;
    QVec coef;
    for (size_t i = 0; i < monos.size(); ++i)
        if (!is_zero(fc[i])) {
            support.push_back(monos[i]);
            coef.push_back(fc[i]);
        }
    QVec vals = pairing_column(ctx, support, g);
    Rational s = 0;
    for (size_t i = 0; i < support.size(); ++i) s += coef[i] * vals[i];
    return s;
}

QMat pairing_block(const DunklContext& ctx, const std::vector<ExpVec>& rows,
                   const std::vector<ExpVec>& cols) {
    QMat out(rows.size(), cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
        MultiPoly g = expand_diff_monomial(ctx.n, cols[j]);
        QVec col = pairing_column(ctx, rows, g);
        for (size_t i = 0; i < rows.size(); ++i) out.at(i, j) = col[i];
    }
    return out;
}

QMat gram_matrix(const DunklContext& ctx, int d) {
    auto monos = diff_exponents(ctx.n, d);
    return pairing_block(ctx, monos, monos);
}

bool h2_identity_holds(const DunklContext& ctx, int k) {
    int n = ctx.n;
    MultiPoly pk = power_sum(n, k);
    MultiPoly lhs(n);
    for (int i = 1; i <= n; ++i) lhs += dunkl_apply(ctx, i, dunkl_apply(ctx, i, pk));
    MultiPoly rhs(n);
    if (k >= 2) {
        rhs += power_sum(n, k - 2) * (ctx.c + 1) * Rational((long)k * (k - 1));
        MultiPoly conv(n);
        for (int i = 0; i <= k - 2; ++i) conv += power_sum(n, i) * power_sum(n, k - 2 - i);
        rhs -= conv * ctx.c * Rational(k);
    }
    return lhs == rhs;
}

MultiPoly op_hamiltonian_limit(int n, int k, const MultiPoly& f) {
    if (k < 1) throw std::invalid_argument("op_hamiltonian_limit: k >= 1");
    // symmetric input required
    for (int a = 1; a < n; ++a) {
        std::vector<int> s(n);
        std::iota(s.begin(), s.end(), 0);
        std::swap(s[a - 1], s[a]);
        if (permute(s, f) != f)
            throw std::invalid_argument("op_hamiltonian_limit: input not symmetric");
    }
    // P_k = lim c H_k; expanding the rescaled D_i^k to first order in 1/c
    // and using Dlower_i f = 0 for symmetric f leaves one contraction of
    // grad f with (k-1)-fold Dunkl lowerings.  The sign (-1)^k makes the
    // eigenvalue formula P_k(e_l) = (-1)^k (n+1-l)...(n+k-l) e_{l-k} and
    // P_{k+1}(u_k) = -(k+1) hold simultaneously.
    MultiPoly out(n);
    for (int i = 1; i <= n; ++i) {
        MultiPoly v = f.derivative(i);
        for (int t = 0; t < k - 1 && !v.is_zero(); ++t) v = dunkl_lower(i, v);
        out += v;
    }
    if (k % 2) out = -out;
    return out;
}

MultiPoly op_hamiltonian(const DunklContext& ctx, int k, const MultiPoly& f) {
    MultiPoly out(ctx.n);
    for (int i = 1; i <= ctx.n; ++i) {
        MultiPoly v = f;
        for (int t = 0; t < k && !v.is_zero(); ++t) v = dunkl_apply(ctx, i, v);
        out += v;
    }
    return out;
}

}  // namespace daha
