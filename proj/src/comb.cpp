#include "daha/comb.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>

namespace daha {

NumericalSemigroup::NumericalSemigroup(int m_, int n_) : m(m_), n(n_) {
    if (std::gcd(m, n) != 1) throw std::invalid_argument("NumericalSemigroup: gcd != 1");
    long frob = frobenius();
    for (long x = 1; x <= frob; ++x)
        if (!contains(x)) gaps.push_back(x);
}

bool NumericalSemigroup::contains(long x) const {
    if (x < 0) return false;
    for (long a = 0; a * m <= x; ++a)
        if ((x - a * m) % n == 0) return true;
    return false;
}

long SubdiagonalDiagram::size() const {
    return std::accumulate(rows.begin(), rows.end(), 0L);
}

std::vector<long> SubdiagonalDiagram::delta_extras() const {
    std::vector<long> out;
    for (size_t y = 1; y <= rows.size(); ++y)
        for (int x = 1; x <= rows[y - 1]; ++x) out.push_back(label(x, (int)y));
    std::sort(out.begin(), out.end());
    return out;
}

long SubdiagonalDiagram::hplus() const {
    // the arm/leg reading transposes our row storage: with rows along the
    // m-axis the statistic maxes out at (m-1)(n-1)/2 (attained) exactly for
    // the transposed cells, which pins the axis convention
    Partition lam = Partition(rows).transpose();
    long count = 0;
    for (int r = 0; r < lam.length(); ++r)
        for (int c = 0; c < lam.parts()[r]; ++c) {
            long a = lam.arm(r, c), l = lam.leg(r, c);
            // a/(l+1) <= n/m  and  n/m < (a+1)/l (vacuous for l = 0)
            bool left = a * m <= (long)n * (l + 1);
            bool right = (l == 0) || ((long)n * l < (long)m * (a + 1));
            if (left && right) ++count;
        }
    return count;
}

std::vector<long> SubdiagonalDiagram::p_corners() const {
    std::vector<long> out;
    int len = (int)rows.size();
    for (int y = 1; y <= len + 1; ++y) {
        int cur = (y <= len) ? rows[y - 1] : 0;
        int below = (y == 1) ? INT32_MAX : rows[y - 2];
        if (cur < below) out.push_back(label(cur + 1, y));
    }
    return out;
}

std::vector<long> SubdiagonalDiagram::q_corners() const {
    // inner (ES) corners: one per run of equal row lengths, at the box just
    // beyond the run's top row; pinned by transpose consistency of the labels
    std::vector<long> out;
    int len = (int)rows.size();
    for (int y = 1; y <= len; ++y) {
        int cur = rows[y - 1];
        int above = (y == len) ? 0 : rows[y];
        if (above < cur) out.push_back(label(cur + 1, y + 1));
    }
    return out;
}

std::vector<std::pair<long, long>> SubdiagonalDiagram::corner_beta() const {
    std::vector<long> P = p_corners(), Q = q_corners();
    std::vector<std::pair<long, long>> out;
    for (long p : P) {
        long beta = 0;
        for (long p2 : P) beta += (p2 > p);
        for (long q2 : Q) beta -= (q2 > p);
        out.push_back({p, beta});
    }
    return out;
}

namespace {
int row_width(int m, int n, int y) {
    // largest x with the box (x, y) strictly below the diagonal
    return (int)(((long)m * (n - y)) / n);
}
}  // namespace

std::vector<SubdiagonalDiagram> enumerate_diagrams(int m, int n) {
    if (std::gcd(m, n) != 1) throw std::invalid_argument("enumerate_diagrams: gcd != 1");
    std::vector<SubdiagonalDiagram> out;
    std::vector<int> rows;
    std::function<void(int, int)> rec = [&](int y, int maxlen) {
        if (y >= n || maxlen == 0) {
            std::vector<int> trimmed = rows;
            while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
            out.push_back({m, n, trimmed});
            return;
        }
        int cap = std::min(maxlen, row_width(m, n, y));
        for (int len = cap; len >= 0; --len) {
            rows.push_back(len);
            if (len == 0) {
                std::vector<int> trimmed = rows;
                while (!trimmed.empty() && trimmed.back() == 0) trimmed.pop_back();
                out.push_back({m, n, trimmed});
            } else {
                rec(y + 1, len);
            }
            rows.pop_back();
        }
    };
    rec(1, INT32_MAX);
    // dedupe: the len == 0 shortcut and the y-overflow path can both emit
    std::sort(out.begin(), out.end(),
              [](const SubdiagonalDiagram& a, const SubdiagonalDiagram& b) {
                  return a.rows < b.rows;
              });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const SubdiagonalDiagram& a, const SubdiagonalDiagram& b) {
                              return a.rows == b.rows;
                          }),
              out.end());
    return out;
}

long count_diagrams_oracle(int m, int n) {
    // direct lattice count of weakly decreasing rows under the diagonal
    std::function<long(int, int)> rec = [&](int y, int maxlen) -> long {
        if (y >= n) return 1;
        int cap = std::min(maxlen, row_width(m, n, y));
        long total = 0;
        for (int len = 0; len <= cap; ++len) total += (len == 0) ? 1 : rec(y + 1, len);
        return total;
    };
    return rec(1, INT32_MAX);
}

Integer rational_catalan(int m, int n) {
    Integer binom = 1;
    for (int i = 1; i <= n; ++i) binom = binom * (m + n - i + 1) / i;
    return binom / (m + n);
}

TriplyGraded jcfull_superpoly(int m, int n) {
    TriplyGraded out;
    for (const auto& d : enumerate_diagrams(m, n)) {
        long base_q = 2 * d.size() + 2 * d.hplus();
        long base_t = 2 * d.size();
        // expand prod_j (1 + a^2 q^{-2 beta_j} t)
        std::vector<std::array<long, 3>> terms{{0, 0, 0}};
        for (const auto& [p, beta] : d.corner_beta()) {
            std::vector<std::array<long, 3>> next;
            for (const auto& t : terms) {
                next.push_back(t);
                next.push_back({t[0] + 2, t[1] - 2 * beta, t[2] + 1});
            }
            terms = std::move(next);
        }
        for (const auto& t : terms)
            out.add((int)t[0], (int)(base_q + t[1]), (int)(base_t + t[2]), 1);
    }
    return out;
}

std::optional<TriplyGraded> jcfull_to_daha(const TriplyGraded& jc, int m, int n) {
    // divide by (1 + a^2 t): peel terms from the top a-degree down
    std::map<TriplyGraded::Key, long long> rem(jc.terms().begin(), jc.terms().end());
    TriplyGraded quot;
    while (!rem.empty()) {
        // take the largest key in (a, q, t) order
        auto it = std::prev(rem.end());
        auto [key, c] = *it;
        auto [a, q, t] = key;
        // quotient term q0 with q0 * a^2 t matching the leading term
        if (a < 2 || t < 1) {
            // must come from the "1" part; move it to the quotient only if
            // the paired a^2 t term is also present later -- peel from 1 side
            // instead: leading in a means it came from the a^2 t factor
            return std::nullopt;
        }
        TriplyGraded::Key q0{a - 2, q, t - 1};
        quot.add(q0[0], q0[1], q0[2], c);
        // subtract c * (1 + a^2 t) * q0
        for (const TriplyGraded::Key& k : {q0, key}) {
            rem[k] -= c;
            if (rem[k] == 0) rem.erase(k);
        }
    }
    int mu = (m - 1) * (n - 1);
    return quot.shift(mu, -mu, 0);
}

bool is_parking_function(const std::vector<int>& f, int m, int n) {
    if ((int)f.size() != n) return false;
    for (int v : f)
        if (v < 1 || v > m) return false;
    for (int k = 1; k <= m; ++k) {
        long cnt = 0;
        for (int v : f) cnt += (v <= k);
        if ((long)cnt * m < (long)k * n) return false;
    }
    return true;
}

std::vector<std::vector<int>> enumerate_parking_functions(int m, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> f(n, 1);
    while (true) {
        if (is_parking_function(f, m, n)) out.push_back(f);
        int i = 0;
        while (i < n && f[i] == m) f[i++] = 1;
        if (i == n) break;
        ++f[i];
    }
    return out;
}

long parking_count(int m, int n) {
    long r = 1;
    for (int i = 0; i < n - 1; ++i) r *= m;
    return r;
}

bool parking_orbit_property(int m, int n) {
    // rotate all values by +1 mod m; each orbit of size m must contain
    // exactly one parking function
    std::vector<int> f(n, 1);
    while (true) {
        bool canonical = true;  // smallest lexicographic representative
        {
            std::vector<int> g = f;
            for (int s = 1; s < m; ++s) {
                for (auto& v : g) v = v % m + 1;
                if (g < f) { canonical = false; break; }
            }
        }
        if (canonical) {
            int count = 0;
            std::vector<int> g = f;
            for (int s = 0; s < m; ++s) {
                count += is_parking_function(g, m, n);
                for (auto& v : g) v = v % m + 1;
            }
            if (count != 1) return false;
        }
        int i = 0;
        while (i < n && f[i] == m) f[i++] = 1;
        if (i == n) break;
        ++f[i];
    }
    return true;
}

std::vector<std::pair<int, int>> parking_diagram(const std::vector<int>& f, int m, int n) {
    // place labels 1..n: sort by (height desc, label desc); columns 0..n-1
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        if (f[a] != f[b]) return f[a] > f[b];
        return a > b;
    });
    std::vector<std::pair<int, int>> out(n);
    for (int col = 0; col < n; ++col) out[order[col]] = {col, f[order[col]] - 1};
    return out;
}

}  // namespace daha
