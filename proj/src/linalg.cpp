#include "daha/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace daha {

QMat QMat::identity(size_t n) {
    QMat m(n, n);
    for (size_t i = 0; i < n; ++i) m.a_[i][i] = 1;
    return m;
}

QMat QMat::from_rows(std::vector<QVec> rows) {
    QMat m;
    m.rows_ = rows.size();
    m.cols_ = rows.empty() ? 0 : rows[0].size();
    for (const auto& r : rows)
        if (r.size() != m.cols_) throw std::invalid_argument("ragged rows");
    m.a_ = std::move(rows);
    return m;
}

QMat QMat::operator*(const QMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matmul shape mismatch");
    QMat r(rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const Rational& v = a_[i][k];
            if (daha::is_zero(v)) continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                if (daha::is_zero(o.a_[k][j])) continue;
                r.a_[i][j] += v * o.a_[k][j];
            }
        }
    return r;
}

QVec QMat::apply(const QVec& v) const {
    if (v.size() != cols_) throw std::invalid_argument("apply shape mismatch");
    QVec r(rows_, Rational(0));
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            if (!daha::is_zero(a_[i][j]) && !daha::is_zero(v[j])) r[i] += a_[i][j] * v[j];
    return r;
}

QMat QMat::operator+(const QMat& o) const {
    QMat r = *this;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.a_[i][j] += o.a_[i][j];
    return r;
}

QMat QMat::operator-(const QMat& o) const {
    QMat r = *this;
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.a_[i][j] -= o.a_[i][j];
    return r;
}

QMat QMat::operator*(const Rational& c) const {
    QMat r = *this;
    for (auto& row : r.a_)
        for (auto& x : row) x *= c;
    return r;
}

QMat QMat::transpose() const {
    QMat r(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.a_[j][i] = a_[i][j];
    return r;
}

Rational QMat::trace() const {
    Rational t = 0;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) t += a_[i][i];
    return t;
}

bool QMat::is_zero() const {
    for (const auto& row : a_)
        for (const auto& x : row)
            if (!daha::is_zero(x)) return false;
    return true;
}

void QMat::append_row(QVec v) {
    if (rows_ == 0 && cols_ == 0) cols_ = v.size();
    if (v.size() != cols_) throw std::invalid_argument("append_row shape mismatch");
    a_.push_back(std::move(v));
    ++rows_;
}

std::vector<size_t> rref(QMat& m, const std::vector<size_t>& col_order) {
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c : col_order) {
        if (r == m.rows()) break;
        // least-bit-size pivot in column c among rows >= r
        size_t best = m.rows();
        size_t best_bits = 0;
        for (size_t i = r; i < m.rows(); ++i) {
            if (daha::is_zero(m.at(i, c))) continue;
            size_t bits = rat_bits(m.at(i, c));
            if (best == m.rows() || bits < best_bits) {
                best = i;
                best_bits = bits;
            }
        }
        if (best == m.rows()) continue;
        std::swap(m.row(r), m.row(best));
        Rational inv = 1 / m.at(r, c);
        for (auto& x : m.row(r)) x *= inv;
        for (size_t i = 0; i < m.rows(); ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            Rational f = m.at(i, c);
            for (size_t j = 0; j < m.cols(); ++j)
                if (!is_zero(m.at(r, j))) m.at(i, j) -= f * m.at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

std::vector<size_t> rref(QMat& m) {
    std::vector<size_t> order(m.cols());
    std::iota(order.begin(), order.end(), 0);
    return rref(m, order);
}

size_t rank(QMat m) {
    return rref(m).size();
}

QMat nullspace(const QMat& m) {
    QMat w = m;
    std::vector<size_t> pivots = rref(w);
    std::vector<bool> is_pivot(m.cols(), false);
    std::vector<size_t> pivot_row(m.cols(), 0);
    for (size_t i = 0; i < pivots.size(); ++i) {
        is_pivot[pivots[i]] = true;
        pivot_row[pivots[i]] = i;
    }
    QMat out(0, m.cols());
    for (size_t c = 0; c < m.cols(); ++c) {
        if (is_pivot[c]) continue;
        QVec v(m.cols(), Rational(0));
        v[c] = 1;
        for (size_t p = 0; p < m.cols(); ++p)
            if (is_pivot[p]) v[p] = -w.at(pivot_row[p], c);
        out.append_row(std::move(v));
    }
    return out;
}

bool reduce_against(QVec& v, const QMat& rref_basis, const std::vector<size_t>& pivots) {
    for (size_t i = 0; i < pivots.size(); ++i) {
        const Rational& c = v[pivots[i]];
        if (is_zero(c)) continue;
        Rational f = c;  // basis rows have pivot 1
        const QVec& row = rref_basis.row(i);
        for (size_t j = 0; j < v.size(); ++j)
            if (!is_zero(row[j])) v[j] -= f * row[j];
    }
    for (const auto& x : v)
        if (!is_zero(x)) return false;
    return true;
}

QMat row_space_basis(const QMat& m) {
    QMat w = m;
    std::vector<size_t> pivots = rref(w);
    QMat out(0, m.cols());
    for (size_t i = 0; i < pivots.size(); ++i) out.append_row(w.row(i));
    return out;
}

QMat span_union(const QMat& a, const QMat& b) {
    QMat m(0, std::max(a.cols(), b.cols()));
    for (size_t i = 0; i < a.rows(); ++i) m.append_row(a.row(i));
    for (size_t i = 0; i < b.rows(); ++i) m.append_row(b.row(i));
    return row_space_basis(m);
}

bool span_contains(const QMat& space, const QVec& v) {
    QMat w = space;
    std::vector<size_t> pivots = rref(w);
    QVec x = v;
    return reduce_against(x, w, pivots);
}

bool span_equal(const QMat& a, const QMat& b) {
    QMat ra = row_space_basis(a), rb = row_space_basis(b);
    if (ra.rows() != rb.rows()) return false;
    for (size_t i = 0; i < rb.rows(); ++i)
        if (!span_contains(ra, rb.row(i))) return false;
    return true;
}

QMat extend_basis(const QMat& inner, const QMat& outer) {
    QMat acc = row_space_basis(inner);
    std::vector<size_t> pivots;
    {
        QMat tmp = acc;
        pivots = rref(tmp);
        acc = tmp;
    }
    QMat extra(0, outer.cols());
    for (size_t i = 0; i < outer.rows(); ++i) {
        QVec v = outer.row(i);
        if (!reduce_against(v, acc, pivots)) {
            extra.append_row(outer.row(i));
            // fold v (already reduced, nonzero) into acc
            size_t p = 0;
            while (is_zero(v[p])) ++p;
            Rational inv = 1 / v[p];
            for (auto& x : v) x *= inv;
            acc.append_row(v);
            pivots.push_back(p);
        }
    }
    return extra;
}

QMat orthogonal_complement(const QMat& v, const QMat& gram) {
    if (v.rows() == 0) {
        // everything
        return QMat::identity(gram.rows());
    }
    // rows w with v G w^T = 0
    return nullspace(v * gram);
}

QMat solve_left(const QMat& m, const QMat& target) {
    // x * m = t  <=>  m^T x^T = t^T; solve by RREF of [m^T | t^T]
    QMat mt = m.transpose();
    QMat aug(mt.rows(), mt.cols() + target.rows());
    for (size_t i = 0; i < mt.rows(); ++i) {
        for (size_t j = 0; j < mt.cols(); ++j) aug.at(i, j) = mt.at(i, j);
        for (size_t k = 0; k < target.rows(); ++k) aug.at(i, mt.cols() + k) = target.at(k, i);
    }
    std::vector<size_t> order(mt.cols());
    std::iota(order.begin(), order.end(), 0);
    std::vector<size_t> pivots = rref(aug, order);
    QMat x(target.rows(), m.rows());
    for (size_t i = 0; i < pivots.size(); ++i)
        for (size_t k = 0; k < target.rows(); ++k)
            x.at(k, pivots[i]) = aug.at(i, mt.cols() + k);
    // consistency: rows of aug beyond rank must have zero target part
    for (size_t i = pivots.size(); i < aug.rows(); ++i)
        for (size_t k = 0; k < target.rows(); ++k)
            if (!is_zero(aug.at(i, mt.cols() + k)))
                throw std::logic_error("solve_left: inconsistent system");
    return x;
}

QMat exp_nilpotent(const QMat& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("exp of non-square");
    QMat acc = QMat::identity(m.rows());
    QMat pow = QMat::identity(m.rows());
    Rational fact = 1;
    for (size_t k = 1; k <= m.rows() + 1; ++k) {
        pow = pow * m;
        if (pow.is_zero()) return acc;
        fact *= (long)k;
        acc = acc + pow * (1 / fact);
    }
    throw std::invalid_argument("exp_nilpotent: matrix not nilpotent");
}

}  // namespace daha
