#pragma once

#include <vector>

#include "daha/linalg.hpp"
#include "daha/multipoly.hpp"

namespace daha {

// Parameters of the rational Cherednik algebra acting on C[x_1..x_n].
// For the finite-dimensional module L_{m/n} use for_rep(m, n), which
// enforces coprimality.
struct DunklContext {
    int n;
    Rational c;

    DunklContext(int n_, const Rational& c_);
    static DunklContext for_rep(int m, int n);
};

// D_i(f) = df/dx_i + c sum_{j != i} (s_ij f - f)/(x_i - x_j)
MultiPoly dunkl_apply(const DunklContext& ctx, int i, const MultiPoly& f);

// Derivative-free part sum_{j != i} (s_ij f - f)/(x_i - x_j); this is the
// c -> infinity rescaled Dunkl operator of the stable theory.
MultiPoly dunkl_lower(int i, const MultiPoly& f);

// Exponent vectors (length n-1) of the degree-d monomials in the
// differences y_i = x_i - x_n, in descending graded-lex order.
std::vector<ExpVec> diff_exponents(int n, int d);

// prod_i (x_i - x_n)^{beta_i}, expanded.
MultiPoly expand_diff_monomial(int n, const ExpVec& beta);

// Deterministic basis of the degree-d translation-invariant polynomials.
std::vector<MultiPoly> basis_R(int n, int d);

// Coordinates of an invariant polynomial over diff_exponents(n, d),
// read off by substituting x_n = 0.
QVec coords_in_diff_basis(const MultiPoly& f, const std::vector<ExpVec>& monos);

// Dunkl pairing (f, g)_c = [Phi(f) g]|_{x=0}; f, g homogeneous invariant.
Rational dunkl_pairing(const DunklContext& ctx, const MultiPoly& f, const MultiPoly& g);

// Pairings (m_alpha, g)_c for many difference monomials at once, sharing
// operator prefixes across the rows.
QVec pairing_column(const DunklContext& ctx, const std::vector<ExpVec>& rows,
                    const MultiPoly& g);

// Gram matrix of the pairing on basis_R(n, d).
QMat gram_matrix(const DunklContext& ctx, int d);

// Gram block: rows/cols indexed by the given difference monomials.
QMat pairing_block(const DunklContext& ctx, const std::vector<ExpVec>& rows,
                   const std::vector<ExpVec>& cols);

// Checks ybar^2(p_k) = (1+c) k(k-1) p_{k-2} - k c sum_{i=0}^{k-2} p_i p_{k-2-i}
// by direct Dunkl application in the full polynomial ring.
bool h2_identity_holds(const DunklContext& ctx, int k);

// Normalized Olshanetsky-Perelomov Hamiltonian (c -> infinity limit):
// P_k(f) = sum_i Dlower_i^{k-1} (df/dx_i); input must be symmetric.
MultiPoly op_hamiltonian_limit(int n, int k, const MultiPoly& f);

// Finite-c Hamiltonian sum_i D_i^k.
MultiPoly op_hamiltonian(const DunklContext& ctx, int k, const MultiPoly& f);

}  // namespace daha
