#include "daha/lrep.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace daha {

namespace {

// [D_a, x_b] as a matrix on L(d), from the defining commutation relation:
// [D_a, x_a] = 1 - c sum_{j != a} s_{aj},  [D_a, x_b] = c s_{ab} for a != b.
QMat dunkl_mult_commutator(const FiniteRep& rep, const Rational& c, int a, int b, int d) {
    size_t dim = rep.dim(d);
    if (a == b) {
        QMat m = QMat::identity(dim);
        for (int j = 1; j <= rep.n(); ++j) {
            if (j == a) continue;
            m = m - rep.transposition(a, j, d) * c;
        }
        return m;
    }
    return rep.transposition(a, b, d) * c;
}

std::vector<int> adjacent_decomposition(std::vector<int> p) {
    // writes the permutation (0-based one-line, i -> p[i]) as a product of
    // adjacent transpositions t_a = (a-1, a), returned left to right
    std::vector<int> word;
    bool moved = true;
    while (moved) {
        moved = false;
        for (size_t i = 0; i + 1 < p.size(); ++i) {
            if (p[i] > p[i + 1]) {
                std::swap(p[i], p[i + 1]);
                word.push_back((int)i + 1);
                moved = true;
            }
        }
    }
    std::reverse(word.begin(), word.end());
    return word;
}

}  // namespace

const FiniteRep::Level& FiniteRep::level(int d) const {
    if (d < 0 || d >= (int)levels_.size()) throw std::out_of_range("FiniteRep: degree");
    return levels_[d];
}

FiniteRep::Level& FiniteRep::level(int d) {
    if (d < 0 || d >= (int)levels_.size()) throw std::out_of_range("FiniteRep: degree");
    return levels_[d];
}

int FiniteRep::dim(int d) const {
    if (d < 0 || d >= (int)levels_.size()) return 0;
    return (int)levels_[d].gram.rows();
}

long FiniteRep::total_dim() const {
    long t = 0;
    for (const auto& lv : levels_) t += (long)lv.gram.rows();
    return t;
}

const QMat& FiniteRep::adjacent_transposition(int a, int d) const {
    if (a < 1 || a >= n_) throw std::out_of_range("adjacent_transposition");
    return level(d).smat[a - 1];
}

const QMat& FiniteRep::mult_y(int i, int d) const {
    if (i < 1 || i >= n_) throw std::out_of_range("mult_y");
    return level(d).ymult[i - 1];
}

const QMat& FiniteRep::delta_op(int i, int d) const {
    if (i < 1 || i >= n_) throw std::out_of_range("delta_op");
    return level(d).dmat[i - 1];
}

QMat FiniteRep::permutation(const std::vector<int>& sigma, int d) const {
    QMat m = QMat::identity(dim(d));
    for (int a : adjacent_decomposition(sigma)) m = m * adjacent_transposition(a, d);
    return m;
}

QMat FiniteRep::transposition(int a, int b, int d) const {
    if (a == b) return QMat::identity(dim(d));
    std::vector<int> sigma(n_);
    std::iota(sigma.begin(), sigma.end(), 0);
    std::swap(sigma[a - 1], sigma[b - 1]);
    return permutation(sigma, d);
}

QMat FiniteRep::dunkl(int i, int d) const {
    // D_i = Delta_i - (1/n) sum_j Delta_j on R (sum of Dunkl operators
    // vanishes on translation-invariant polynomials); Delta_n = 0.
    if (d == 0) return QMat(0, dim(0));
    QMat acc(dim(d - 1), dim(d));
    for (int j = 1; j < n_; ++j) acc = acc + delta_op(j, d);
    acc = acc * Rational(-1, n_);
    if (i < n_) acc = acc + delta_op(i, d);
    return acc;
}

QMat FiniteRep::mult_centered(int i, int d) const {
    QMat acc(dim(d + 1), dim(d));
    for (int j = 1; j < n_; ++j) acc = acc + mult_y(j, d);
    acc = acc * Rational(-1, n_);
    if (i < n_) acc = acc + mult_y(i, d);
    return acc;
}

QMat FiniteRep::mult_power_sum(int k, int d) const {
    QMat acc(dim(d + k), dim(d));
    for (int i = 1; i <= n_; ++i) {
        QMat pw = QMat::identity(dim(d));
        for (int t = 0; t < k; ++t) pw = mult_centered(i, d + t) * pw;
        acc = acc + pw;
    }
    return acc;
}

QMat FiniteRep::mult_poly(const MultiPoly& f, int d) const {
    if (f.is_zero()) return QMat(0, dim(d));
    if (!f.is_homogeneous()) throw std::invalid_argument("mult_poly: not homogeneous");
    int k = f.degree();
    QMat acc(dim(d + k), dim(d));
    MultiPoly red = f.substitute_zero(n_);
    for (const auto& [e, c] : red.terms()) {
        QMat pw = QMat::identity(dim(d));
        int at = d;
        for (int i = 0; i < n_ - 1; ++i)
            for (int t = 0; t < e[i]; ++t) {
                pw = mult_y(i + 1, at) * pw;
                ++at;
            }
        acc = acc + pw * c;
    }
    return acc;
}

QMat FiniteRep::fourier(int d) const {
    // Phi = exp(e) exp(-f) exp(e) with e = x^2/2 raising, f = -y^2/2 lowering,
    // assembled on the full graded space.
    long N = total_dim();
    std::vector<long> offset(levels_.size() + 1, 0);
    for (size_t i = 0; i < levels_.size(); ++i) offset[i + 1] = offset[i] + dim((int)i);
    auto scatter = [&](const QMat& block, int from, int to, QMat& out) {
        for (size_t r = 0; r < block.rows(); ++r)
            for (size_t c = 0; c < block.cols(); ++c)
                out.at(offset[to] + r, offset[from] + c) = block.at(r, c);
    };
    QMat E((size_t)N, (size_t)N), F((size_t)N, (size_t)N);
    for (int a = 0; a + 2 <= top_degree(); ++a)
        scatter(mult_power_sum(2, a) * Rational(1, 2), a, a + 2, E);
    for (int a = 2; a <= top_degree(); ++a) {
        QMat y2(dim(a - 2), dim(a));
        for (int i = 1; i <= n_; ++i) y2 = y2 + dunkl(i, a - 1) * dunkl(i, a);
        scatter(y2 * Rational(-1, 2), a, a - 2, F);
    }
    QMat phi = exp_nilpotent(E) * exp_nilpotent(F * Rational(-1)) * exp_nilpotent(E);
    QMat out(dim(top_degree() - d), dim(d));
    for (size_t r = 0; r < out.rows(); ++r)
        for (size_t c = 0; c < out.cols(); ++c)
            out.at(r, c) = phi.at(offset[top_degree() - d] + r, offset[d] + c);
    return out;
}

Rational FiniteRep::trace(const Partition& type, int d) const {
    {
        std::lock_guard<std::mutex> lk(memo_->mu);
        auto it = memo_->map.find({type, d});
        if (it != memo_->map.end()) return it->second;
    }
    Rational t = permutation(permutation_of_type(type, n_), d).trace();
    std::lock_guard<std::mutex> lk(memo_->mu);
    memo_->map.emplace(std::make_pair(type, d), t);
    return t;
}

long FiniteRep::isotypic_mult(const Partition& lam, int d) const {
    Rational s = 0;
    for (const auto& type : all_partitions(n_))
        s += Rational(class_size(type)) * Rational((long)sn_character(lam, type)) * trace(type, d);
    Integer fact = 1;
    for (int i = 2; i <= n_; ++i) fact *= i;
    s /= Rational(fact);
    if (s.get_den() != 1) throw std::logic_error("isotypic_mult: non-integer multiplicity");
    return (long)s.get_num().get_si();
}

std::map<int, long> FiniteRep::isotypic_dims(const Partition& lam) const {
    std::map<int, long> out;
    for (int d = 0; d <= top_degree(); ++d) {
        long mult = isotypic_mult(lam, d);
        if (mult != 0) out[d] = mult;
    }
    return out;
}

SymFunc FiniteRep::frobenius(int d) const {
    std::map<Partition, Rational> traces;
    for (const auto& type : all_partitions(n_)) traces[type] = trace(type, d);
    return frobenius_from_traces(n_, traces);
}

FiniteRep FiniteRep::build(int m, int n) {
    DunklContext ctx = DunklContext::for_rep(m, n);
    FiniteRep rep;
    rep.m_ = m;
    rep.n_ = n;

    Level base;
    base.monos = {ExpVec(n - 1, 0)};
    base.gram = QMat::identity(1);
    base.smat.assign(n - 1, QMat::identity(1));
    base.dmat.assign(n - 1, QMat(0, 1));
    base.ymult.assign(n - 1, QMat(0, 1));  // filled by the next step
    rep.levels_.push_back(std::move(base));

    int top = (m - 1) * (n - 1);
    for (int d = 0; d < top; ++d) {
        Level& cur = rep.levels_[d];
        int dim_d = (int)cur.gram.rows();
        int sp = (n - 1) * dim_d;
        auto span_index = [&](int i, int j) { return (i - 1) * dim_d + j; };

        // commutators [Delta_a, y_i] on L(d)
        std::vector<std::vector<QMat>> com(n - 1, std::vector<QMat>(n - 1));
        for (int a = 1; a < n; ++a)
            for (int i = 1; i < n; ++i) {
                QMat v = dunkl_mult_commutator(rep, ctx.c, a, i, d) -
                         dunkl_mult_commutator(rep, ctx.c, a, n, d) -
                         dunkl_mult_commutator(rep, ctx.c, n, i, d) +
                         dunkl_mult_commutator(rep, ctx.c, n, n, d);
                com[a - 1][i - 1] = std::move(v);
            }

        // Delta_a applied to the spanning vectors v_{ij} = y_i b_j
        std::vector<QMat> delta_span(n - 1, QMat(dim_d, sp));
        for (int a = 1; a < n; ++a) {
            for (int i = 1; i < n; ++i) {
                QMat part = com[a - 1][i - 1];
                if (d > 0) part = part + rep.levels_[d - 1].ymult[i - 1] * cur.dmat[a - 1];
                for (int j = 0; j < dim_d; ++j)
                    for (int r = 0; r < dim_d; ++r)
                        delta_span[a - 1].at(r, span_index(i, j)) = part.at(r, j);
            }
        }

        // Gram of the spanning set: (v_{aj}, v_{kl}) = e_j^T G_d Delta_a v_{kl}
        QMat gram_span(sp, sp);
        for (int a = 1; a < n; ++a) {
            QMat rows = cur.gram * delta_span[a - 1];
            for (int j = 0; j < dim_d; ++j)
                for (int s = 0; s < sp; ++s) gram_span.at(span_index(a, j), s) = rows.at(j, s);
        }
        if (!(gram_span == gram_span.transpose()))
            throw std::logic_error("FiniteRep::build: spanning Gram not symmetric");

        // radical of the spanning Gram; coset = greedy smallest-monomial complement
        QMat kernel = nullspace(gram_span);
        std::vector<ExpVec> span_monos(sp);
        for (int i = 1; i < n; ++i)
            for (int j = 0; j < dim_d; ++j) {
                ExpVec e = cur.monos[j];
                e[i - 1] += 1;
                span_monos[span_index(i, j)] = std::move(e);
            }
        std::vector<size_t> col_order(sp);
        std::iota(col_order.begin(), col_order.end(), 0);
        // visit largest monomials first so the kept complement is smallest
        std::sort(col_order.begin(), col_order.end(), [&](size_t x, size_t y) {
            if (span_monos[x] != span_monos[y])
                return GradedLexGreater{}(span_monos[x], span_monos[y]);
            return x > y;
        });
        std::vector<size_t> pivots = rref(kernel, col_order);
        std::vector<bool> is_pivot(sp, false);
        for (size_t p : pivots) is_pivot[p] = true;
        std::vector<int> coset;
        for (int s = 0; s < sp; ++s)
            if (!is_pivot[s]) coset.push_back(s);
        std::sort(coset.begin(), coset.end(), [&](int x, int y) {
            if (span_monos[x] != span_monos[y])
                return GradedLexGreater{}(span_monos[y], span_monos[x]);
            return x < y;
        });
        int dim_next = (int)coset.size();

        // reduction matrix: spanning coordinates -> coset coordinates
        QMat red(dim_next, sp);
        for (int s = 0; s < sp; ++s) {
            QVec v(sp, Rational(0));
            v[s] = 1;
            reduce_against(v, kernel, pivots);
            for (int t = 0; t < dim_next; ++t) red.at(t, s) = v[coset[t]];
        }

        Level next;
        for (int s : coset) next.monos.push_back(span_monos[s]);
        next.gram = QMat(dim_next, dim_next);
        for (int r = 0; r < dim_next; ++r)
            for (int c2 = 0; c2 < dim_next; ++c2)
                next.gram.at(r, c2) = gram_span.at(coset[r], coset[c2]);

        // y_i: L(d) -> L(d+1)
        cur.ymult.clear();
        for (int i = 1; i < n; ++i) {
            QMat y(dim_next, dim_d);
            for (int j = 0; j < dim_d; ++j)
                for (int t = 0; t < dim_next; ++t) y.at(t, j) = red.at(t, span_index(i, j));
            cur.ymult.push_back(std::move(y));
        }

        // Delta_a: L(d+1) -> L(d)
        for (int a = 1; a < n; ++a) {
            QMat dm(dim_d, dim_next);
            for (int t = 0; t < dim_next; ++t)
                for (int r = 0; r < dim_d; ++r) dm.at(r, t) = delta_span[a - 1].at(r, coset[t]);
            next.dmat.push_back(std::move(dm));
        }

        // adjacent transpositions on L(d+1), via their action on the spanning set
        for (int b = 1; b < n; ++b) {
            QMat span_image(sp, sp);  // columns: s_b(v_{ij}) in spanning coordinates
            const QMat& sb = cur.smat[b - 1];
            for (int i = 1; i < n; ++i)
                for (int j = 0; j < dim_d; ++j) {
                    int colidx = span_index(i, j);
                    for (int l = 0; l < dim_d; ++l) {
                        const Rational& w = sb.at(l, j);
                        if (is_zero(w)) continue;
                        if (b <= n - 2) {
                            int ti = (i == b) ? b + 1 : (i == b + 1 ? b : i);
                            span_image.at(span_index(ti, l), colidx) += w;
                        } else {
                            // s_{n-1,n}: y_i -> y_i - y_{n-1} (i < n-1), y_{n-1} -> -y_{n-1}
                            if (i < n - 1) {
                                span_image.at(span_index(i, l), colidx) += w;
                                span_image.at(span_index(n - 1, l), colidx) -= w;
                            } else {
                                span_image.at(span_index(n - 1, l), colidx) -= w;
                            }
                        }
                    }
                }
            QMat sb_next(dim_next, dim_next);
            QMat reduced = red * span_image;
            for (int t = 0; t < dim_next; ++t)
                for (int u = 0; u < dim_next; ++u) sb_next.at(t, u) = reduced.at(t, coset[u]);
            next.smat.push_back(std::move(sb_next));
        }
        next.ymult.assign(n - 1, QMat(0, dim_next));  // filled on the next pass

        rep.levels_.push_back(std::move(next));
    }
    return rep;
}

// ---- hom spaces ----

std::vector<std::vector<int>> k_subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if ((int)cur.size() == k) {
            out.push_back(cur);
            return;
        }
        for (int v = start; v < n; ++v) {
            cur.push_back(v);
            rec(v + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

namespace {
// apply a permutation to a sorted subset; returns (sorted image, sign)
std::pair<std::vector<int>, int> permute_subset(const std::vector<int>& sigma,
                                                const std::vector<int>& J) {
    std::vector<int> img;
    for (int j : J) img.push_back(sigma[j]);
    int sign = 1;
    for (size_t i = 0; i + 1 < img.size(); ++i)
        for (size_t j = 0; j + 1 < img.size() - i; ++j)
            if (img[j] > img[j + 1]) {
                std::swap(img[j], img[j + 1]);
                sign = -sign;
            }
    return {img, sign};
}
}  // namespace

std::vector<QMat> hom_exterior_basis(const FiniteRep& rep, int k, int d) {
    int n = rep.n();
    if (k < 0 || k > n - 1) throw std::out_of_range("hom_exterior_basis: k");
    int dim = rep.dim(d);
    auto subsets = k_subsets(n, k);
    std::map<std::vector<int>, int> subset_index;
    for (size_t i = 0; i < subsets.size(); ++i) subset_index[subsets[i]] = (int)i;
    int nsub = (int)subsets.size();
    int nvar = nsub * dim;
    if (dim == 0) return {};

    QMat constraints(0, nvar);
    auto var = [&](int sub, int coord) { return sub * dim + coord; };

    // equivariance under adjacent transpositions: S_a phi_J = sign phi_{sJ}
    for (int a = 1; a < n; ++a) {
        std::vector<int> sigma(n);
        std::iota(sigma.begin(), sigma.end(), 0);
        std::swap(sigma[a - 1], sigma[a]);
        const QMat& sa = rep.adjacent_transposition(a, d);
        for (int s = 0; s < nsub; ++s) {
            auto [img, sign] = permute_subset(sigma, subsets[s]);
            int s2 = subset_index[img];
            for (int r = 0; r < dim; ++r) {
                QVec row(nvar, Rational(0));
                for (int c = 0; c < dim; ++c) row[var(s, c)] += sa.at(r, c);
                row[var(s2, r)] -= sign;
                constraints.append_row(std::move(row));
            }
        }
    }
    // reduced: contraction with 1_h vanishes
    if (k >= 1) {
        for (const auto& Jp : k_subsets(n, k - 1)) {
            for (int r = 0; r < dim; ++r) {
                QVec row(nvar, Rational(0));
                for (int i = 0; i < n; ++i) {
                    if (std::find(Jp.begin(), Jp.end(), i) != Jp.end()) continue;
                    std::vector<int> J = Jp;
                    J.push_back(i);
                    int sign = 1;
                    for (size_t t = 0; t + 1 < J.size(); ++t)
                        for (size_t u = 0; u + 1 < J.size() - t; ++u)
                            if (J[u] > J[u + 1]) {
                                std::swap(J[u], J[u + 1]);
                                sign = -sign;
                            }
                    row[var(subset_index[J], r)] += sign;
                }
                constraints.append_row(std::move(row));
            }
        }
    }

    QMat sols = nullspace(constraints);
    std::vector<QMat> out;
    for (size_t s = 0; s < sols.rows(); ++s) {
        QMat phi(nsub, dim);
        for (int sub = 0; sub < nsub; ++sub)
            for (int c = 0; c < dim; ++c) phi.at(sub, c) = sols.at(s, var(sub, c));
        out.push_back(std::move(phi));
    }
    return out;
}

// ---- serialization ----

namespace {
nlohmann::json mat_to_json(const QMat& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (size_t c = 0; c < m.cols(); ++c) row.push_back(rat_to_string(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["data"] = std::move(rows);
    return j;
}

QMat mat_from_json(const nlohmann::json& j) {
    size_t rows = j.at("rows"), cols = j.at("cols");
    QMat m(rows, cols);
    const auto& data = j.at("data");
    for (size_t r = 0; r < rows; ++r)
        for (size_t c = 0; c < cols; ++c)
            m.at(r, c) = rat_from_string(data.at(r).at(c).get<std::string>());
    return m;
}
}  // namespace

std::string FiniteRep::to_json() const {
    nlohmann::json j;
    j["format"] = "daha-rep";
    j["version"] = 1;
    j["m"] = m_;
    j["n"] = n_;
    nlohmann::json levels = nlohmann::json::array();
    for (const auto& lv : levels_) {
        nlohmann::json L;
        L["monos"] = lv.monos;
        L["gram"] = mat_to_json(lv.gram);
        nlohmann::json sm = nlohmann::json::array(), ym = nlohmann::json::array(),
                       dm = nlohmann::json::array();
        for (const auto& x : lv.smat) sm.push_back(mat_to_json(x));
        for (const auto& x : lv.ymult) ym.push_back(mat_to_json(x));
        for (const auto& x : lv.dmat) dm.push_back(mat_to_json(x));
        L["smat"] = std::move(sm);
        L["ymult"] = std::move(ym);
        L["dmat"] = std::move(dm);
        levels.push_back(std::move(L));
    }
    j["levels"] = std::move(levels);
    return j.dump();
}

FiniteRep FiniteRep::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    if (j.at("format") != "daha-rep" || (int)j.at("version") != 1)
        throw std::runtime_error("FiniteRep::from_json: unsupported cache format/version");
    FiniteRep rep;
    rep.m_ = j.at("m");
    rep.n_ = j.at("n");
    for (const auto& L : j.at("levels")) {
        Level lv;
        for (const auto& mo : L.at("monos")) lv.monos.push_back(mo.get<ExpVec>());
        lv.gram = mat_from_json(L.at("gram"));
        for (const auto& x : L.at("smat")) lv.smat.push_back(mat_from_json(x));
        for (const auto& x : L.at("ymult")) lv.ymult.push_back(mat_from_json(x));
        for (const auto& x : L.at("dmat")) lv.dmat.push_back(mat_from_json(x));
        rep.levels_.push_back(std::move(lv));
    }
    return rep;
}

}  // namespace daha
