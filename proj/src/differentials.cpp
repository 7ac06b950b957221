#include "daha/differentials.hpp"

#include <algorithm>
#include <stdexcept>

namespace daha {

// ---- polynomial forms ----

PolyForm PolyForm::one_form(std::vector<MultiPoly> values) {
    PolyForm f;
    f.nvars = (int)values.size();
    f.k = 1;
    for (int i = 0; i < f.nvars; ++i)
        if (!values[i].is_zero()) f.comp[{i}] = values[i];
    return f;
}

void PolyForm::add(const std::vector<int>& subset, const MultiPoly& p) {
    if (p.is_zero()) return;
    auto it = comp.find(subset);
    if (it == comp.end()) comp.emplace(subset, p);
    else {
        it->second += p;
        if (it->second.is_zero()) comp.erase(it);
    }
}

MultiPoly PolyForm::at(const std::vector<int>& subset) const {
    auto it = comp.find(subset);
    return it == comp.end() ? MultiPoly(nvars) : it->second;
}

bool PolyForm::is_zero() const { return comp.empty(); }

bool PolyForm::operator==(const PolyForm& o) const {
    return nvars == o.nvars && k == o.k && comp == o.comp;
}

PolyForm PolyForm::operator+(const PolyForm& o) const {
    PolyForm r = *this;
    for (const auto& [s, p] : o.comp) r.add(s, p);
    return r;
}

PolyForm PolyForm::operator*(const Rational& c) const {
    PolyForm r = PolyForm::zero_form(nvars, k);
    for (const auto& [s, p] : comp) r.add(s, p * c);
    return r;
}

namespace {
// merge sorted subsets; returns sign, or 0 if they overlap
int merge_subsets(const std::vector<int>& a, const std::vector<int>& b,
                  std::vector<int>& out) {
    out = a;
    out.insert(out.end(), b.begin(), b.end());
    int sign = 1;
    for (size_t i = 0; i + 1 < out.size(); ++i)
        for (size_t j = 0; j + 1 < out.size() - i; ++j) {
            if (out[j] == out[j + 1]) return 0;
            if (out[j] > out[j + 1]) {
                std::swap(out[j], out[j + 1]);
                sign = -sign;
            }
        }
    return sign;
}

int removal_sign(const std::vector<int>& s, int i) {
    // sign (-1)^{pos} with pos the index of i in s
    int pos = (int)(std::find(s.begin(), s.end(), i) - s.begin());
    return pos % 2 == 0 ? 1 : -1;
}
}  // namespace

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
    PolyForm r = PolyForm::zero_form(std::max(a.nvars, b.nvars), a.k + b.k);
    std::vector<int> merged;
    for (const auto& [sa, pa] : a.comp)
        for (const auto& [sb, pb] : b.comp) {
            int sign = merge_subsets(sa, sb, merged);
            if (sign == 0) continue;
            r.add(merged, pa * pb * Rational(sign));
        }
    return r;
}

PolyForm contract_with(const PolyForm& phi,
                       const std::function<MultiPoly(int, const MultiPoly&)>& op) {
    PolyForm r = PolyForm::zero_form(phi.nvars, phi.k - 1);
    if (phi.k == 0) return r;
    for (const auto& [s, p] : phi.comp) {
        for (int i : s) {
            std::vector<int> rest;
            for (int j : s)
                if (j != i) rest.push_back(j);
            MultiPoly v = op(i, p);
            if (v.is_zero()) continue;
            r.add(rest, v * Rational(removal_sign(s, i)));
        }
    }
    return r;
}

PolyForm nabla_form(const DunklContext& ctx, const PolyForm& phi) {
    PolyForm r = PolyForm::zero_form(phi.nvars, phi.k + 1);
    for (const auto& [s, p] : phi.comp) {
        for (int i = 0; i < phi.nvars; ++i) {
            if (std::find(s.begin(), s.end(), i) != s.end()) continue;
            MultiPoly v = dunkl_apply(ctx, i + 1, p);
            if (v.is_zero()) continue;
            std::vector<int> merged;
            int sign = merge_subsets({i}, s, merged);
            r.add(merged, v * Rational(sign));
        }
    }
    return r;
}

PolyForm contract_alpha_n(const PolyForm& phi, int N) {
    return contract_with(phi, [N](int i, const MultiPoly& p) {
        MultiPoly xi = MultiPoly::variable(p.nvars(), i + 1);
        MultiPoly r = p;
        for (int t = 0; t < N; ++t) r = r * xi;
        return r;
    });
}

// ---- finite-m differentials ----

Differentials::Differentials(const FilteredRep& filt) : filt_(filt) {
    const FiniteRep& rep = filt_.rep();
    int n = rep.n();
    hom_.resize(n);
    for (int k = 0; k < n; ++k) {
        hom_[k].resize(rep.top_degree() + 1);
        for (int d = 0; d <= rep.top_degree(); ++d) {
            HomSpace& H = hom_[k][d];
            H.basis = hom_exterior_basis(rep, k, d);
            int nb = (int)H.basis.size();
            int nsub = (int)k_subsets(n, k).size();
            int dim = rep.dim(d);
            H.flat = QMat(nb, (size_t)nsub * dim);
            for (int r = 0; r < nb; ++r)
                for (int s = 0; s < nsub; ++s)
                    for (int c = 0; c < dim; ++c)
                        H.flat.at(r, (size_t)s * dim + c) = H.basis[r].at(s, c);
            if (nb == 0) {
                H.adapted_mat = QMat(0, 0);
                continue;
            }
            // filtration levels on hom coordinates
            QMat accumulated(0, nb);
            for (int f = filt_.level_min(); f <= filt_.level_max(); ++f) {
                QMat V = filt_.algebraic_f(f, d);
                std::vector<size_t> pivots;
                QMat vr = V;
                pivots = rref(vr);
                // residual columns per basis element
                QMat constraints(0, nb);
                // rows: for each subset s and coordinate c, sum_r resid == 0
                std::vector<QVec> resid(nb, QVec());
                for (int r = 0; r < nb; ++r) {
                    QVec stacked;
                    for (int s = 0; s < nsub; ++s) {
                        QVec w(dim);
                        for (int c = 0; c < dim; ++c) w[c] = H.basis[r].at(s, c);
                        reduce_against(w, vr, pivots);
                        for (int c = 0; c < dim; ++c) stacked.push_back(w[c]);
                    }
                    resid[r] = std::move(stacked);
                }
                for (size_t row = 0; row < (size_t)nsub * dim; ++row) {
                    QVec cr(nb);
                    bool nonzero = false;
                    for (int r = 0; r < nb; ++r) {
                        cr[r] = resid[r][row];
                        if (!is_zero(cr[r])) nonzero = true;
                    }
                    if (nonzero) constraints.append_row(std::move(cr));
                }
                QMat inside = constraints.rows() ? nullspace(constraints) : QMat::identity(nb);
                QMat extra = extend_basis(accumulated, inside);
                for (size_t r = 0; r < extra.rows(); ++r) {
                    H.adapted.push_back(extra.row(r));
                    H.level.push_back(f);
                }
                accumulated = span_union(accumulated, inside);
                if ((int)accumulated.rows() == nb) break;
            }
            if ((int)H.adapted.size() != nb)
                throw std::logic_error("Differentials: filtration not exhaustive on hom space");
            H.adapted_mat = QMat(nb, nb);
            for (int r = 0; r < nb; ++r)
                for (int c = 0; c < nb; ++c) H.adapted_mat.at(r, c) = H.adapted[r][c];
        }
    }
}

const Differentials::HomSpace& Differentials::hom(int k, int d) const {
    static const HomSpace empty;
    if (k < 0 || k >= (int)hom_.size()) return empty;
    if (d < 0 || d >= (int)hom_[k].size()) return empty;
    return hom_[k][d];
}

int Differentials::gr_dim(int k, int d, int f) const {
    const HomSpace& H = hom(k, d);
    int cnt = 0;
    for (int lv : H.level) cnt += (lv == f);
    return cnt;
}

std::function<QMat(int, int)> Differentials::alpha_values(int N) const {
    const FiniteRep& rep = filt_.rep();
    if (N > 0) {
        return [&rep, N](int i, int d) {
            QMat m = QMat::identity(rep.dim(d));
            for (int t = 0; t < N; ++t) m = rep.mult_centered(i, d + t) * m;
            return m;
        };
    }
    if (N < 0) {
        return [&rep, N](int i, int d) {
            QMat m = QMat::identity(rep.dim(d));
            for (int t = 0; t < -N; ++t) m = rep.dunkl(i, d - t) * m;
            return m;
        };
    }
    return [&rep](int i, int d) {
        int n = rep.n();
        if (d == 0) return QMat(rep.dim(0), rep.dim(0));
        QMat acc(rep.dim(d), rep.dim(d));
        for (int j = 1; j <= n; ++j) {
            QMat term = rep.mult_centered(j, d - 1) * rep.dunkl(j, d);
            if (j == i) acc = acc + term * Rational(n - 1, n);
            else acc = acc - term * Rational(1, n);
        }
        return acc;
    };
}

QMat Differentials::contraction_matrix(int k, int d, int deg_shift,
                                       const std::function<QMat(int, int)>& value) const {
    const FiniteRep& rep = filt_.rep();
    int n = rep.n();
    const HomSpace& src = hom(k, d);
    const HomSpace& dst = hom(k - 1, d + deg_shift);
    int nb_src = (int)src.basis.size();
    int nb_dst = (int)dst.basis.size();
    QMat out(nb_dst, nb_src);
    if (nb_src == 0 || nb_dst == 0 || k == 0) return out;

    auto subsets_k = k_subsets(n, k);
    auto subsets_km1 = k_subsets(n, k - 1);
    std::map<std::vector<int>, int> idx_k, idx_km1;
    for (size_t i = 0; i < subsets_k.size(); ++i) idx_k[subsets_k[i]] = (int)i;
    for (size_t i = 0; i < subsets_km1.size(); ++i) idx_km1[subsets_km1[i]] = (int)i;
    int dim_dst = rep.dim(d + deg_shift);

    // precompute value matrices
    std::vector<QMat> A;
    for (int i = 1; i <= n; ++i) A.push_back(value(i, d));

    for (int r = 0; r < nb_src; ++r) {
        const QMat& phi = src.basis[r];
        // psi_J = sum_{i not in J} sgn(i, J) A_i phi_{J u i}
        QMat psi((size_t)subsets_km1.size(), dim_dst);
        for (size_t sj = 0; sj < subsets_km1.size(); ++sj) {
            const auto& J = subsets_km1[sj];
            for (int i = 0; i < n; ++i) {
                if (std::find(J.begin(), J.end(), i) != J.end()) continue;
                std::vector<int> Ju = J;
                Ju.push_back(i);
                std::sort(Ju.begin(), Ju.end());
                int pos = (int)(std::find(Ju.begin(), Ju.end(), i) - Ju.begin());
                int sign = (pos % 2 == 0) ? 1 : -1;
                QVec col(rep.dim(d));
                for (int c = 0; c < rep.dim(d); ++c) col[c] = phi.at(idx_k[Ju], c);
                QVec img = A[i].apply(col);
                for (int c = 0; c < dim_dst; ++c)
                    psi.at(sj, c) += img[c] * Rational(sign);
            }
        }
        // re-reduce: precompose with Lambda^{k-1} of the projection to h
        QMat red((size_t)subsets_km1.size(), dim_dst);
        for (size_t sj = 0; sj < subsets_km1.size(); ++sj) {
            const auto& J = subsets_km1[sj];
            // expand wedge of (e_j - u), u = (1/n) sum_i e_i; at most one u
            for (int c = 0; c < dim_dst; ++c) red.at(sj, c) += psi.at(sj, c);
            for (size_t pos = 0; pos < J.size(); ++pos) {
                for (int i = 0; i < n; ++i) {
                    std::vector<int> K;
                    for (size_t t = 0; t < J.size(); ++t)
                        if (t != pos) K.push_back(J[t]);
                    std::vector<int> merged;
                    int sign = merge_subsets({i}, K, merged);
                    if (sign == 0) continue;
                    // reposition: i sits at slot pos in the original wedge
                    int reposition = (pos % 2 == 0) ? 1 : -1;
                    // moving i from front to slot pos costs (-1)^{pos}
                    Rational wgt = Rational(-1, (long)filt_.rep().n()) * sign * reposition;
                    for (int c = 0; c < dim_dst; ++c)
                        red.at(sj, c) += psi.at(idx_km1[merged], c) * wgt;
                }
            }
        }
        // coordinates of red in the destination basis
        QVec flatrow;
        for (size_t s = 0; s < subsets_km1.size(); ++s)
            for (int c = 0; c < dim_dst; ++c) flatrow.push_back(red.at(s, c));
        QMat target(1, flatrow.size());
        for (size_t c = 0; c < flatrow.size(); ++c) target.at(0, c) = flatrow[c];
        QMat coords = solve_left(dst.flat, target);
        for (int t = 0; t < nb_dst; ++t) out.at(t, r) = coords.at(0, t);
    }
    return out;
}

QMat Differentials::dn_gr_block(int N, int k, int d, int f) const {
    const FiniteRep& rep = filt_.rep();
    const HomSpace& src = hom(k, d);
    const HomSpace& dst = hom(k - 1, d + N);
    int shift = filtration_shift(N);
    int fs = f, fd = f + shift;
    std::vector<int> src_rows, dst_rows;
    for (size_t r = 0; r < src.level.size(); ++r)
        if (src.level[r] == fs) src_rows.push_back((int)r);
    for (size_t r = 0; r < dst.level.size(); ++r)
        if (dst.level[r] == fd) dst_rows.push_back((int)r);
    QMat out(dst_rows.size(), src_rows.size());
    if (src_rows.empty() || k == 0 || dst.basis.empty()) return out;

    QMat cm = contraction_matrix(k, d, N, alpha_values(N));
    // express images of the chosen adapted rows in the adapted basis of dst
    for (size_t c = 0; c < src_rows.size(); ++c) {
        const QVec& srow = src.adapted[src_rows[c]];
        QVec img(dst.basis.size(), Rational(0));
        for (size_t j = 0; j < srow.size(); ++j) {
            if (is_zero(srow[j])) continue;
            for (size_t t = 0; t < dst.basis.size(); ++t) img[t] += cm.at(t, j) * srow[j];
        }
        QMat target(1, img.size());
        for (size_t t = 0; t < img.size(); ++t) target.at(0, t) = img[t];
        QMat coords = solve_left(dst.adapted_mat, target);
        for (size_t t = 0; t < dst.level.size(); ++t) {
            if (dst.level[t] > fd && !is_zero(coords.at(0, t)))
                throw std::logic_error("dn_gr_block: filtration compatibility violated");
        }
        for (size_t rr = 0; rr < dst_rows.size(); ++rr)
            out.at(rr, c) = coords.at(0, dst_rows[rr]);
    }
    return out;
}

bool Differentials::dn_squared_zero(int N) const {
    const FiniteRep& rep = filt_.rep();
    int shift = filtration_shift(N);
    for (int k = 2; k < rep.n(); ++k)
        for (int d = 0; d <= rep.top_degree(); ++d)
            for (int f = filt_.level_min(); f <= filt_.level_max(); ++f) {
                if (gr_dim(k, d, f) == 0) continue;
                if (d + N < 0 || d + 2 * N < 0) continue;
                if (d + 2 * N > rep.top_degree()) continue;
                QMat first = dn_gr_block(N, k, d, f);
                QMat second = dn_gr_block(N, k - 1, d + N, f + shift);
                if (!(second * first).is_zero()) return false;
            }
    return true;
}

bool Differentials::anticommute(int N, int M) const {
    const FiniteRep& rep = filt_.rep();
    int sn = filtration_shift(N), sm = filtration_shift(M);
    for (int k = 2; k < rep.n(); ++k)
        for (int d = 0; d <= rep.top_degree(); ++d)
            for (int f = filt_.level_min(); f <= filt_.level_max(); ++f) {
                if (gr_dim(k, d, f) == 0) continue;
                if (d + N < 0 || d + M < 0 || d + N + M < 0) continue;
                if (d + N + M > rep.top_degree()) continue;
                QMat nm = dn_gr_block(M, k - 1, d + N, f + sn) * dn_gr_block(N, k, d, f);
                QMat mn = dn_gr_block(N, k - 1, d + M, f + sm) * dn_gr_block(M, k, d, f);
                if (!(nm + mn).is_zero()) return false;
            }
    return true;
}

TriplyGraded Differentials::dn_homology(int N) const {
    const FiniteRep& rep = filt_.rep();
    int mu = rep.mu();
    int shift = filtration_shift(N);
    TriplyGraded out;
    for (int k = 0; k < rep.n(); ++k)
        for (int d = 0; d <= rep.top_degree(); ++d)
            for (int f = filt_.level_min(); f <= filt_.level_max(); ++f) {
                int dim = gr_dim(k, d, f);
                if (dim == 0) continue;
                size_t rank_out = 0, rank_in = 0;
                if (k >= 1 && d + N >= 0 && d + N <= rep.top_degree())
                    rank_out = rank(dn_gr_block(N, k, d, f));
                if (k + 1 < rep.n() && d - N >= 0 && d - N <= rep.top_degree())
                    rank_in = rank(dn_gr_block(N, k + 1, d - N, f - shift));
                long h = dim - (long)rank_out - (long)rank_in;
                if (h < 0) throw std::logic_error("dn_homology: negative dimension");
                if (h > 0)
                    out.add(mu + 2 * k, 2 * d - mu, d + mu / 2 + k - f, h);
            }
    return out;
}

bool Differentials::fourier_exchange_check() const {
    const FiniteRep& rep = filt_.rep();
    int top = rep.top_degree();
    // induced map of Phi on hom spaces, in adapted coordinates
    auto phi_map = [&](int k, int d) -> QMat {
        const HomSpace& src = hom(k, d);
        const HomSpace& dst = hom(k, top - d);
        QMat out(dst.basis.size(), src.basis.size());
        if (src.basis.empty() || dst.basis.empty()) return out;
        QMat F = rep.fourier(d);
        int nsub = (int)src.basis[0].rows();
        for (size_t r = 0; r < src.basis.size(); ++r) {
            QMat img(nsub, rep.dim(top - d));
            for (int s = 0; s < nsub; ++s) {
                QVec col(rep.dim(d));
                for (int c = 0; c < rep.dim(d); ++c) col[c] = src.basis[r].at(s, c);
                QVec ic = F.apply(col);
                for (int c = 0; c < rep.dim(top - d); ++c) img.at(s, c) = ic[c];
            }
            QVec flat;
            for (int s = 0; s < nsub; ++s)
                for (int c = 0; c < rep.dim(top - d); ++c) flat.push_back(img.at(s, c));
            QMat target(1, flat.size());
            for (size_t c = 0; c < flat.size(); ++c) target.at(0, c) = flat[c];
            QMat coords = solve_left(dst.flat, target);
            for (size_t t = 0; t < dst.basis.size(); ++t) out.at(t, r) = coords.at(0, t);
        }
        return out;
    };

    // compare Phi d_1 with +- d_{-1} Phi on the full (not gr) hom spaces
    int sign = 0;
    for (int k = 1; k < rep.n(); ++k)
        for (int d = 0; d <= top; ++d) {
            if (d + 1 > top) continue;
            if (hom(k, d).basis.empty()) continue;
            QMat lhs = phi_map(k - 1, d + 1) * contraction_matrix(k, d, 1, alpha_values(1));
            QMat rhs = contraction_matrix(k, top - d, -1, alpha_values(-1)) * phi_map(k, d);
            if (lhs.rows() == 0 || lhs.cols() == 0) continue;
            if (lhs.is_zero() && rhs.is_zero()) continue;
            if (sign == 0) {
                if (lhs == rhs) sign = 1;
                else if (lhs == rhs * Rational(-1)) sign = -1;
                else return false;
            } else {
                QMat expect = (sign == 1) ? rhs : rhs * Rational(-1);
                if (!(lhs == expect)) return false;
            }
        }
    return sign != 0;
}

}  // namespace daha
