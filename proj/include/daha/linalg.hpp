#pragma once

#include <vector>

#include "daha/rational.hpp"

namespace daha {

using QVec = std::vector<Rational>;

// Dense matrix over exact rationals, row-major.
class QMat {
public:
    QMat() : rows_(0), cols_(0) {}
    QMat(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows, QVec(cols, Rational(0))) {}

    static QMat identity(size_t n);
    static QMat from_rows(std::vector<QVec> rows);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    Rational& at(size_t r, size_t c) { return a_[r][c]; }
    const Rational& at(size_t r, size_t c) const { return a_[r][c]; }
    QVec& row(size_t r) { return a_[r]; }
    const QVec& row(size_t r) const { return a_[r]; }

    QMat operator*(const QMat& o) const;
    QVec apply(const QVec& v) const;        // matrix * column vector
    QMat operator+(const QMat& o) const;
    QMat operator-(const QMat& o) const;
    QMat operator*(const Rational& c) const;
    bool operator==(const QMat& o) const { return a_ == o.a_; }

    QMat transpose() const;
    Rational trace() const;
    bool is_zero() const;
    void append_row(QVec v);

private:
    size_t rows_, cols_;
    std::vector<QVec> a_;
};

// Row-reduce in place over a given column visiting order; returns pivot
// columns in the order found.  Pivot selection inside a column prefers the
// entry of least bit-size to slow coefficient growth.
std::vector<size_t> rref(QMat& m, const std::vector<size_t>& col_order);
std::vector<size_t> rref(QMat& m);  // natural order 0..cols-1

size_t rank(QMat m);

// Basis of the (right) nullspace of m, one row per kernel vector.
QMat nullspace(const QMat& m);

// Row space membership / reduction against an RREF basis with known pivots.
// Reduces v in place; returns true if v reduced to zero (v in row space).
bool reduce_against(QVec& v, const QMat& rref_basis, const std::vector<size_t>& pivots);

// Span utilities; subspaces are row-basis matrices (not necessarily reduced).
QMat row_space_basis(const QMat& m);                 // RREF, zero rows dropped
QMat span_union(const QMat& a, const QMat& b);
bool span_contains(const QMat& space, const QVec& v);
bool span_equal(const QMat& a, const QMat& b);

// Extends `inner` (subspace of the row space of `outer`) to a basis of
// `outer`: returns rows of `outer`-span completing `inner`.
QMat extend_basis(const QMat& inner, const QMat& outer);

// Orthogonal complement of the row space of `v` inside the full space,
// with respect to the symmetric bilinear form given by `gram`:
// { w : v G w^T = 0 }.
QMat orthogonal_complement(const QMat& v, const QMat& gram);

// Solves x * m = target row-wise for each row of target; throws if unsolvable.
QMat solve_left(const QMat& m, const QMat& target);

// exp of a nilpotent matrix (exact; throws if not nilpotent)
QMat exp_nilpotent(const QMat& m);

}  // namespace daha
