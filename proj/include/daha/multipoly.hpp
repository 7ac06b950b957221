#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/rational.hpp"

namespace daha {

using ExpVec = std::vector<int>;

// Graded-lex, x_1 ranked highest.  Greater-than comparator so that
// map.begin() is the leading term.
struct GradedLexGreater {
    bool operator()(const ExpVec& a, const ExpVec& b) const;
};

// Sparse multivariate polynomial in x_1..x_n over exact rationals.
// No zero coefficients are stored; all exponent vectors have length n.
class MultiPoly {
public:
    MultiPoly() : nvars_(0) {}
    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c);
    static MultiPoly monomial(const ExpVec& e, const Rational& c = Rational(1));
    static MultiPoly variable(int nvars, int i);  // x_i, 1-based

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    const std::map<ExpVec, Rational, GradedLexGreater>& terms() const { return terms_; }

    int degree() const;  // total degree; -1 for zero
    bool is_homogeneous() const;
    Rational coeff(const ExpVec& e) const;
    Rational constant_term() const;

    void add_term(const ExpVec& e, const Rational& c);

    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly operator+(const MultiPoly& o) const { MultiPoly r = *this; r += o; return r; }
    MultiPoly operator-(const MultiPoly& o) const { MultiPoly r = *this; r -= o; return r; }
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator*(const Rational& c) const;
    MultiPoly operator-() const { return *this * Rational(-1); }
    bool operator==(const MultiPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly derivative(int i) const;            // d/dx_i, 1-based
    MultiPoly permute(const std::vector<int>& sigma) const;  // x_i -> x_{sigma(i)}, 0-based table
    MultiPoly substitute_zero(int i) const;        // x_i -> 0, 1-based
    // x_j -> x_j + t * x_{n+1}-style shift used by the translation-invariance check:
    // substitutes x_j -> x_j + c for all j simultaneously.
    MultiPoly shift_all(const Rational& c) const;

    std::string to_string() const;

private:
    int nvars_;
    std::map<ExpVec, Rational, GradedLexGreater> terms_;
};

// (s_ij f - f) / (x_i - x_j); exact by construction, aborts if division fails.
MultiPoly divided_difference(const MultiPoly& f, int i, int j);  // 1-based

// permutation action with sigma given as 0-based image table (i -> sigma[i])
MultiPoly permute(const std::vector<int>& sigma, const MultiPoly& f);

// elementary symmetric e_k(v_1..v_m) of given polynomials
MultiPoly elementary_symmetric(const std::vector<MultiPoly>& vars, int k);
// power sum p_k(x_1..x_n)
MultiPoly power_sum(int nvars, int k);
// centered variables x_i - (x_1+..+x_n)/n
std::vector<MultiPoly> centered_variables(int nvars);
// Vandermonde determinant prod_{i<j} (x_i - x_j)
MultiPoly vandermonde(int nvars);

bool is_translation_invariant(const MultiPoly& f);

}  // namespace daha
