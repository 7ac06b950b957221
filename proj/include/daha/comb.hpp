#pragma once

#include <optional>
#include <vector>

#include "daha/partition.hpp"
#include "daha/trigraded.hpp"

namespace daha {

// Numerical semigroup generated by coprime m, n.
struct NumericalSemigroup {
    int m, n;
    std::vector<long> gaps;  // sorted ascending; |gaps| = (m-1)(n-1)/2

    NumericalSemigroup(int m, int n);
    bool contains(long x) const;
    long frobenius() const { return (long)m * n - m - n; }
};

// Young diagram below the diagonal of the m x n rectangle; rows are indexed
// from the bottom (row y = 1..n-1, weakly decreasing lengths).  Boxes carry
// the labels f(x, y) = mn - nx - my, which below the diagonal run over the
// gaps bijectively; the labels of the diagram together with the semigroup
// form the 0-normalized semimodule Delta.
struct SubdiagonalDiagram {
    int m, n;
    std::vector<int> rows;  // may be shorter than n-1; no trailing zeros

    long size() const;
    long label(int x, int y) const { return (long)m * n - (long)n * x - (long)m * y; }
    std::vector<long> delta_extras() const;  // labels of boxes = Delta minus Gamma

    // arm/leg statistic: #cells with a/(l+1) <= n/m < (a+1)/l (right bound
    // +infinity when l = 0)
    long hplus() const;

    // SE corner labels P_j (addable boxes, bottom to top, including the one
    // above the top row) and ES corner labels Q_j
    std::vector<long> p_corners() const;
    std::vector<long> q_corners() const;
    // beta(P_j) = #{P_i > P_j} - #{Q_i > P_j}
    std::vector<std::pair<long, long>> corner_beta() const;
};

// all subdiagonal diagrams; count = C(m+n, n)/(m+n)
std::vector<SubdiagonalDiagram> enumerate_diagrams(int m, int n);

// brute-force count oracle (independent recursive path count)
long count_diagrams_oracle(int m, int n);
// rational Catalan number C(m+n, n)/(m+n)
Integer rational_catalan(int m, int n);

// the conjectural combinatorial superpolynomial, in the paper's squared
// variables: sum_D q^{2|D| + 2h+} t^{2|D|} prod_j (1 + a^2 q^{-2 beta_j} t)
TriplyGraded jcfull_superpoly(int m, int n);

// frozen trefoil-calibrated change of variables to the DAHA conventions:
// divide by the unreduced factor (1 + a^2 t), then multiply by (a/q)^mu.
// Returns nothing if the division is inexact (reported by the caller).
std::optional<TriplyGraded> jcfull_to_daha(const TriplyGraded& jc, int m, int n);

// parking functions f: {1..n} -> {1..m} with |f^{-1}([1,k])| >= kn/m
bool is_parking_function(const std::vector<int>& f, int m, int n);
std::vector<std::vector<int>> enumerate_parking_functions(int m, int n);
long parking_count(int m, int n);  // m^{n-1}
// every orbit of the value-rotation action contains exactly one parking fn
bool parking_orbit_property(int m, int n);
// diagram placement: for each label 1..n its (column, height) cell
std::vector<std::pair<int, int>> parking_diagram(const std::vector<int>& f, int m, int n);

}  // namespace daha
