#include "daha/filtration.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace daha {

namespace {
int floor_div(int a, int b) {
    int q = a / b, r = a % b;
    return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// trace of the permutation action restricted to a stable subspace (row basis)
Rational subspace_trace(const QMat& basis, const QMat& action) {
    if (basis.rows() == 0) return Rational(0);
    // images of the basis rows are rows of basis * action^T; express back
    return solve_left(basis, basis * action.transpose()).trace();
}
}  // namespace

FilteredRep::FilteredRep(FiniteRep rep) : rep_(std::move(rep)) { build(); }

void FilteredRep::build() {
    int top = rep_.top_degree();
    int n = rep_.n();

    // powers of the ideal of positive-degree invariants
    std::vector<QMat> full;
    for (int d = 0; d <= top; ++d) full.push_back(QMat::identity(rep_.dim(d)));
    powers_.push_back(std::move(full));
    for (int j = 1;; ++j) {
        std::vector<QMat> next;
        bool any = false;
        for (int d = 0; d <= top; ++d) {
            QMat acc(0, rep_.dim(d));
            for (int k = 2; k <= n; ++k) {
                if (d - k < 0) continue;
                const QMat& prev = powers_[j - 1][d - k];
                if (prev.rows() == 0) continue;
                QMat imgs = prev * rep_.mult_power_sum(k, d - k).transpose();
                for (size_t r = 0; r < imgs.rows(); ++r) acc.append_row(imgs.row(r));
            }
            QMat basis = row_space_basis(acc);
            if (basis.rows() > 0) any = true;
            next.push_back(std::move(basis));
        }
        if (!any) break;
        powers_.push_back(std::move(next));
    }

    {
        // guard level: a^j L = 0 from here on
        std::vector<QMat> zero;
        for (int d = 0; d <= top; ++d) zero.push_back(QMat(0, rep_.dim(d)));
        powers_.push_back(std::move(zero));
    }

    int delta = rep_.delta();
    int jmax = (int)powers_.size();
    level_min_ = -delta - 2;
    level_max_ = 2 * (jmax + 1) + delta + 2;

    for (int i = level_min_ - 1; i <= level_max_; ++i) {
        std::vector<QMat> dec, alg;
        for (int d = 0; d <= top; ++d) {
            int h = d - delta;
            int j0 = std::clamp(floor_div(h + i, 2) + 1, 0, (int)powers_.size() - 1);
            QMat f = powers_[j0][d];
            QMat perp = orthogonal_complement(f, rep_.gram(d));
            dec.push_back(std::move(f));
            alg.push_back(row_space_basis(perp));
        }
        fdec_.push_back(std::move(dec));
        falg_.push_back(std::move(alg));
    }

    // sanity: filtration is increasing and exhaustive
    for (int d = 0; d <= top; ++d) {
        if ((int)falg_.front()[d].rows() != 0)
            throw std::logic_error("FilteredRep: lowest level not zero");
        if ((int)falg_.back()[d].rows() != rep_.dim(d))
            throw std::logic_error("FilteredRep: highest level not full");
    }
}

const QMat& FilteredRep::ideal_power(int j, int d) const {
    if (j < 0) throw std::invalid_argument("ideal_power: j < 0");
    if (d < 0 || d > rep_.top_degree()) throw std::out_of_range("ideal_power: degree");
    return powers_[std::min(j, (int)powers_.size() - 1)][d];
}

const QMat& FilteredRep::decreasing_f(int i, int d) const {
    int idx = std::clamp(i, level_min_ - 1, level_max_) - (level_min_ - 1);
    return fdec_[idx][d];
}

const QMat& FilteredRep::algebraic_f(int i, int d) const {
    int idx = std::clamp(i, level_min_ - 1, level_max_) - (level_min_ - 1);
    return falg_[idx][d];
}

long FilteredRep::gr_mult(const Partition& lam, int d, int level) const {
    auto key = std::make_tuple(lam, d, level);
    auto it = gr_memo_.find(key);
    if (it != gr_memo_.end()) return it->second;
    int n = rep_.n();
    Rational s = 0;
    for (const auto& type : all_partitions(n)) {
        QMat action = rep_.permutation(permutation_of_type(type, n), d);
        Rational tr = subspace_trace(algebraic_f(level, d), action) -
                      subspace_trace(algebraic_f(level - 1, d), action);
        s += Rational(class_size(type)) * Rational((long)sn_character(lam, type)) * tr;
    }
    Integer fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    s /= Rational(fact);
    if (s.get_den() != 1) throw std::logic_error("gr_mult: non-integer multiplicity");
    long v = (long)s.get_num().get_si();
    gr_memo_.emplace(key, v);
    return v;
}

TriplyGraded FilteredRep::superpolynomial() const {
    TriplyGraded out;
    int mu = rep_.mu();
    for (int k = 0; k < rep_.n(); ++k) {
        Partition hook = hook_partition(rep_.n(), k);
        for (int d = 0; d <= rep_.top_degree(); ++d) {
            for (int i = level_min_; i <= level_max_; ++i) {
                if (algebraic_f(i, d).rows() == algebraic_f(i - 1, d).rows()) continue;
                long mult = gr_mult(hook, d, i);
                if (mult == 0) continue;
                int a = mu + 2 * k;
                int q = 2 * d - mu;
                int t = d + mu / 2 + k - i;
                out.add(a, q, t, mult);
            }
        }
    }
    return out;
}

bool FilteredRep::symmetry_audit(std::string* report) const {
    bool ok = true;
    std::ostringstream os;
    int delta = rep_.delta();
    for (const auto& lam : all_partitions(rep_.n())) {
        for (int i = level_min_; i <= level_max_; ++i) {
            for (int h = 1; h <= delta; ++h) {
                int dplus = delta + h, dminus = delta - h;
                long mp = (dplus <= rep_.top_degree()) ? gr_mult(lam, dplus, i) : 0;
                long mm = (dminus >= 0) ? gr_mult(lam, dminus, i) : 0;
                if (mp != mm) {
                    ok = false;
                    os << "asymmetry: lambda=" << lam.to_string() << " level=" << i
                       << " h=+-" << h << " dims " << mp << " vs " << mm << "\n";
                }
            }
        }
    }
    if (report) *report = os.str();
    return ok;
}

bool FilteredRep::kostant_check() const {
    if (rep_.m() <= rep_.n()) throw std::invalid_argument("kostant_check: needs m > n");
    int n = rep_.n();
    int N = n * (n - 1) / 2;  // degree of the Vandermonde
    // span chain S(d) of Dunkl derivatives of the W class
    std::vector<QMat> span(rep_.top_degree() + 1);
    for (int d = 0; d <= rep_.top_degree(); ++d) span[d] = QMat(0, rep_.dim(d));
    {
        QMat wmat = rep_.mult_poly(vandermonde(n), 0);  // L(0) -> L(N)
        QVec w(wmat.rows());
        for (size_t r = 0; r < wmat.rows(); ++r) w[r] = wmat.at(r, 0);
        span[N].append_row(std::move(w));
    }
    for (int d = N; d >= 1; --d) {
        if (span[d].rows() == 0) continue;
        QMat acc = span[d - 1];
        for (int i = 1; i < n; ++i) {
            QMat imgs = span[d] * rep_.delta_op(i, d).transpose();
            for (size_t r = 0; r < imgs.rows(); ++r) acc.append_row(imgs.row(r));
        }
        span[d - 1] = row_space_basis(acc);
    }
    for (int d = 0; d <= rep_.top_degree(); ++d) {
        QMat perp = orthogonal_complement(ideal_power(1, d), rep_.gram(d));
        if (!span_equal(span[d], perp)) return false;
    }
    return true;
}

bool delta_thin(const TriplyGraded& h, int delta) {
    for (const auto& [k, c] : h.terms())
        if (2 * k[0] + k[1] - 2 * k[2] != delta) return false;
    return true;
}

}  // namespace daha
