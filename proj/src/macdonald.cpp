#include "daha/macdonald.hpp"

#include <stdexcept>

namespace daha {

namespace {

// Gaussian solve over QTScalar; A is square, returns x with A x = b.
std::vector<QTScalar> solve_qts(std::vector<std::vector<QTScalar>> A,
                                std::vector<QTScalar> b) {
    size_t n = A.size();
    std::vector<size_t> perm(n);
    for (size_t c = 0; c < n; ++c) {
        size_t piv = n;
        size_t best = SIZE_MAX;
        for (size_t r = c; r < n; ++r) {
            if (A[r][c].is_zero()) continue;
            size_t sz = A[r][c].num().terms().size() + A[r][c].den().terms().size();
            if (sz < best) {
                best = sz;
                piv = r;
            }
        }
        if (piv == n) throw std::logic_error("solve_qts: singular system");
        std::swap(A[c], A[piv]);
        std::swap(b[c], b[piv]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c || A[r][c].is_zero()) continue;
            QTScalar f = A[r][c] / A[c][c];
            for (size_t k = c; k < n; ++k) A[r][k] -= f * A[c][k];
            b[r] -= f * b[c];
        }
    }
    std::vector<QTScalar> x(n);
    for (size_t c = 0; c < n; ++c) x[c] = b[c] / A[c][c];
    return x;
}

// matrix of phi in the Schur basis: column lam gives phi(s_lam) coefficients
std::map<Partition, std::map<Partition, QTScalar>> phi_schur_matrix(int size, PhiKind kind) {
    std::map<Partition, std::map<Partition, QTScalar>> out;
    for (const auto& lam : all_partitions(size)) {
        SymFunc img = to_basis(phi_substitution(SymFunc::s(lam), kind), SFBasis::Schur);
        for (const auto& [nu, c] : img.coef()) out[nu][lam] = c;
    }
    return out;
}

}  // namespace

MacdonaldTable::MacdonaldTable(int cap) : cap_(cap) {
    if (cap < 1) throw std::invalid_argument("MacdonaldTable: cap >= 1");
    if (symfunc_degree_cap() < cap) set_symfunc_degree_cap(cap);
    for (int size = 1; size <= cap_; ++size) {
        auto parts = all_partitions(size);
        auto mq = phi_schur_matrix(size, PhiKind::OneMinusQ);
        auto mt = phi_schur_matrix(size, PhiKind::OneMinusT);
        for (const auto& mu : parts) {
            // unknowns: Schur coefficients; conditions per the definition
            std::vector<std::vector<QTScalar>> A;
            std::vector<QTScalar> b;
            Partition mut = mu.transpose();
            for (const auto& nu : parts) {
                if (!dominance_leq(mu, nu)) {  // nu not >= mu: kill phi_{1-q} component
                    std::vector<QTScalar> row;
                    for (const auto& lam : parts) row.push_back(mq[nu][lam]);
                    A.push_back(std::move(row));
                    b.push_back(QTScalar(0));
                }
                if (!dominance_leq(mut, nu)) {
                    std::vector<QTScalar> row;
                    for (const auto& lam : parts) row.push_back(mt[nu][lam]);
                    A.push_back(std::move(row));
                    b.push_back(QTScalar(0));
                }
            }
            {
                std::vector<QTScalar> row(parts.size(), QTScalar(0));
                for (size_t i = 0; i < parts.size(); ++i)
                    if (parts[i] == Partition({size})) row[i] = QTScalar(1);
                A.push_back(std::move(row));
                b.push_back(QTScalar(1));
            }
            if (A.size() < parts.size())
                throw std::logic_error("MacdonaldTable: underdetermined system");
            // solve the (overdetermined but consistent) system by elimination
            size_t nvar = parts.size();
            // forward eliminate rectangular [A | b]
            size_t row = 0;
            std::vector<std::vector<QTScalar>> M = A;
            std::vector<QTScalar> rb = b;
            std::vector<int> pivot_of_col(nvar, -1);
            for (size_t c = 0; c < nvar && row < M.size(); ++c) {
                size_t piv = M.size();
                size_t best = SIZE_MAX;
                for (size_t r = row; r < M.size(); ++r) {
                    if (M[r][c].is_zero()) continue;
                    size_t sz = M[r][c].num().terms().size() + M[r][c].den().terms().size();
                    if (sz < best) { best = sz; piv = r; }
                }
                if (piv == M.size()) continue;
                std::swap(M[row], M[piv]);
                std::swap(rb[row], rb[piv]);
                for (size_t r = 0; r < M.size(); ++r) {
                    if (r == row || M[r][c].is_zero()) continue;
                    QTScalar f = M[r][c] / M[row][c];
                    for (size_t k = c; k < nvar; ++k) M[r][k] -= f * M[row][k];
                    rb[r] -= f * rb[row];
                }
                pivot_of_col[c] = (int)row;
                ++row;
            }
            if (row != nvar) throw std::logic_error("MacdonaldTable: singular system");
            // consistency of the extra rows
            for (size_t r = row; r < M.size(); ++r)
                if (!rb[r].is_zero())
                    throw std::logic_error("MacdonaldTable: inconsistent conditions");
            SymFunc h(SFBasis::Schur);
            for (size_t c = 0; c < nvar; ++c) {
                QTScalar v = rb[pivot_of_col[c]] / M[pivot_of_col[c]][c];
                // q,t-Kostka coefficients are polynomials
                QTPoly p = v.to_poly_or_throw();
                h.add_coeff(parts[c], QTScalar(p));
            }
            table_.emplace(mu, std::move(h));
        }
    }
}

const SymFunc& MacdonaldTable::modified_macdonald(const Partition& mu) const {
    auto it = table_.find(mu);
    if (it == table_.end()) throw std::out_of_range("modified_macdonald: beyond cap");
    return it->second;
}

std::map<Partition, QTScalar> MacdonaldTable::to_macdonald(const SymFunc& f) const {
    SymFunc fs = to_basis(f, SFBasis::Schur);
    // group by size
    std::map<Partition, QTScalar> out;
    std::map<int, std::map<Partition, QTScalar>> by_size;
    for (const auto& [lam, c] : fs.coef()) by_size[lam.size()][lam] = c;
    for (const auto& [size, coefs] : by_size) {
        if (size == 0) {
            // constants are their own expansion
            auto it = coefs.find(Partition());
            if (it != coefs.end() && !it->second.is_zero())
                throw std::invalid_argument("to_macdonald: constant term unsupported");
            continue;
        }
        if (size > cap_) throw std::out_of_range("to_macdonald: beyond cap");
        auto parts = all_partitions(size);
        std::vector<std::vector<QTScalar>> A(parts.size(),
                                             std::vector<QTScalar>(parts.size(), QTScalar(0)));
        std::vector<QTScalar> b(parts.size(), QTScalar(0));
        for (size_t i = 0; i < parts.size(); ++i) {
            for (size_t j = 0; j < parts.size(); ++j)
                A[i][j] = modified_macdonald(parts[j]).coeff(parts[i]);
            auto it = coefs.find(parts[i]);
            if (it != coefs.end()) b[i] = it->second;
        }
        auto x = solve_qts(std::move(A), std::move(b));
        for (size_t j = 0; j < parts.size(); ++j)
            if (!x[j].is_zero()) out[parts[j]] = x[j];
    }
    return out;
}

SymFunc MacdonaldTable::from_macdonald(const std::map<Partition, QTScalar>& coef) const {
    SymFunc out(SFBasis::Schur);
    for (const auto& [mu, c] : coef) {
        const SymFunc& h = modified_macdonald(mu);
        for (const auto& [lam, k] : h.coef()) out.add_coeff(lam, c * k);
    }
    return out;
}

SymFunc MacdonaldTable::nabla(const SymFunc& f, int power) const {
    auto coef = to_macdonald(f);
    std::map<Partition, QTScalar> out;
    for (const auto& [mu, c] : coef) {
        long nq = mu.transpose().n_stat(), nt = mu.n_stat();
        QTScalar eig = QTScalar::monomial((int)(power * nq), (int)(power * nt));
        out[mu] = c * eig;
    }
    return from_macdonald(out);
}

bool MacdonaldTable::omega_duality_check(const Partition& mu) const {
    const SymFunc& h = modified_macdonald(mu);
    long nq = mu.transpose().n_stat(), nt = mu.n_stat();
    for (const auto& lam : all_partitions(mu.size())) {
        QTScalar lhs = h.coeff(lam.transpose());  // omega swaps Schur labels
        QTScalar rhs = h.coeff(lam).invert_vars() * QTScalar::monomial((int)nq, (int)nt);
        if (lhs != rhs) return false;
    }
    return true;
}

bool MacdonaldTable::transpose_symmetry_check(const Partition& mu) const {
    const SymFunc& a = modified_macdonald(mu);
    const SymFunc& b = modified_macdonald(mu.transpose());
    for (const auto& lam : all_partitions(mu.size()))
        if (b.coeff(lam) != a.coeff(lam).swap_qt()) return false;
    return true;
}

bool MacdonaldTable::hook_product_check(const Partition& mu) const {
    int n = mu.size();
    // RHS: prod over non-corner cells of (1 + a q^{a'} t^{l'}); collect the
    // a^k coefficient as a QTPoly
    std::vector<QTPoly> acoef(n, QTPoly(0));
    acoef[0] = QTPoly(1);
    int cells = 0;
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu.parts()[r]; ++c) {
            if (r == 0 && c == 0) continue;
            QTPoly w = QTPoly::monomial(mu.coarm(r, c), mu.coleg(r, c));
            ++cells;
            for (int k = std::min(cells, n - 1); k >= 1; --k)
                acoef[k] = acoef[k] + acoef[k - 1] * w;
        }
    const SymFunc& h = modified_macdonald(mu);
    for (int k = 0; k < n; ++k) {
        QTScalar lhs = h.coeff(hook_partition(n, k));
        if (lhs != QTScalar(acoef[k])) return false;
    }
    return true;
}

QTPoly pi_mu(const Partition& mu) {
    QTPoly out(1);
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu.parts()[r]; ++c) {
            if (r == 0 && c == 0) continue;
            out = out * (QTPoly(1) - QTPoly::monomial(mu.coarm(r, c), mu.coleg(r, c)));
        }
    return out;
}

QTPoly b_mu(const Partition& mu) {
    QTPoly out;
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu.parts()[r]; ++c)
            out += QTPoly::monomial(mu.coarm(r, c), mu.coleg(r, c));
    return out;
}

QTPoly b_mu_inverted(const Partition& mu) {
    QTPoly out;
    for (int r = 0; r < mu.length(); ++r)
        for (int c = 0; c < mu.parts()[r]; ++c)
            out += QTPoly::monomial(-mu.coarm(r, c), -mu.coleg(r, c));
    return out;
}

std::map<Partition, QTScalar> e_n_expansion(const MacdonaldTable& table, int n) {
    if (n > table.cap()) throw std::out_of_range("e_n_expansion: beyond cap");
    std::map<Partition, QTScalar> out;
    for (const auto& mu : all_partitions(n)) {
        QTPoly den(1);
        for (int r = 0; r < mu.length(); ++r)
            for (int c = 0; c < mu.parts()[r]; ++c) {
                int a = mu.arm(r, c), l = mu.leg(r, c);
                den = den * (QTPoly::monomial(a, 0) - QTPoly::monomial(0, l + 1));
                den = den * (QTPoly::monomial(0, l) - QTPoly::monomial(a + 1, 0));
            }
        QTPoly num = (QTPoly(1) - QTPoly::t()) * (QTPoly(1) - QTPoly::q()) *
                     pi_mu(mu) * b_mu(mu);
        out[mu] = QTScalar(num, den);
    }
    return out;
}

SymFunc nabla_character_plus(const MacdonaldTable& table, int k, int n) {
    SymFunc en = to_basis(SymFunc::e(n), SFBasis::Schur);
    return omega(table.nabla(en, k));
}

SymFunc nabla_character_minus(const MacdonaldTable& table, int k, int n) {
    // ch L_{(kn-1)/n} = (-1)^{k(n-1)} omega(nabla^k h_n); the sign makes the
    // result Schur-positive (validated against the representation for
    // (2,3), (5,3), (3,4); see ledger)
    SymFunc hn = to_basis(SymFunc::h(n), SFBasis::Schur);
    SymFunc out = omega(table.nabla(hn, k));
    if ((k * (n - 1)) % 2 == 1) out = out * QTScalar(-1);
    return out;
}

SymFunc nabla_character(const MacdonaldTable& table, int m, int n) {
    if (m % n == 1) return nabla_character_plus(table, m / n, n);
    if (m % n == n - 1) return nabla_character_minus(table, (m + 1) / n, n);
    throw std::invalid_argument("nabla_character: need m = kn +- 1");
}

SymFunc nabla_character_minus_printed(const MacdonaldTable& table, int k, int n) {
    // sum_mu q^{(k+1) n(mu')} t^{(k+1) n(mu)} (1-t)(1-q) Pi_mu B_mu(1/q,1/t)
    //        / prod (q^a - t^{l+1})(t^l - q^{a+1})  *  H~_mu
    std::map<Partition, QTScalar> coef;
    for (const auto& mu : all_partitions(n)) {
        QTPoly den(1);
        for (int r = 0; r < mu.length(); ++r)
            for (int c = 0; c < mu.parts()[r]; ++c) {
                int a = mu.arm(r, c), l = mu.leg(r, c);
                den = den * (QTPoly::monomial(a, 0) - QTPoly::monomial(0, l + 1));
                den = den * (QTPoly::monomial(0, l) - QTPoly::monomial(a + 1, 0));
            }
        long nq = mu.transpose().n_stat(), nt = mu.n_stat();
        QTPoly num = (QTPoly(1) - QTPoly::t()) * (QTPoly(1) - QTPoly::q()) *
                     pi_mu(mu) * b_mu_inverted(mu);
        QTScalar c = QTScalar(num, den) *
                     QTScalar::monomial((int)((k + 1) * nq), (int)((k + 1) * nt));
        coef[mu] = c;
    }
    return table.from_macdonald(coef);
}

std::map<int, SymFunc> specialize_bigraded(const SymFunc& ch_schur) {
    SymFunc fs = to_basis(ch_schur, SFBasis::Schur);
    std::map<int, SymFunc> out;
    for (const auto& [lam, c] : fs.coef()) {
        QTPoly p = c.to_poly_or_throw();
        for (const auto& [key, coef] : p.terms()) {
            int internal = key.first - key.second;
            auto it = out.find(internal);
            if (it == out.end()) it = out.emplace(internal, SymFunc(SFBasis::Schur)).first;
            it->second.add_coeff(lam, QTScalar(Rational(coef)));
        }
    }
    return out;
}

std::map<std::pair<int, int>, long long> aq_collapse(const TriplyGraded& h) {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [k, c] : h.terms()) {
        out[{k[0], k[1]}] += c;
        if (out[{k[0], k[1]}] == 0) out.erase({k[0], k[1]});
    }
    return out;
}

TriplyGraded hook_superpoly(const SymFunc& ch_schur, int m, int n) {
    SymFunc fs = to_basis(ch_schur, SFBasis::Schur);
    int mu = (m - 1) * (n - 1);
    TriplyGraded out;
    for (int k = 0; k < n; ++k) {
        QTScalar c = fs.coeff(hook_partition(n, k));
        if (c.is_zero()) continue;
        QTPoly p = c.to_poly_or_throw();
        for (const auto& [key, coef] : p.terms()) {
            if (coef < 0) throw std::logic_error("hook_superpoly: negative multiplicity");
            out.add(mu + 2 * k, 2 * (key.first - key.second), 2 * key.first + k * (k + 2),
                    coef.get_si());
        }
    }
    return out;
}

}  // namespace daha
