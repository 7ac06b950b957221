#pragma once

#include <functional>
#include <map>

#include "daha/filtration.hpp"

namespace daha {

// Polynomial-valued alternating form on hbar = C^n: components indexed by
// sorted subsets of {0..n-1}.  Used for the exterior-derivative identities
// and the stable-limit calculations.
struct PolyForm {
    int nvars = 0;
    int k = 0;
    std::map<std::vector<int>, MultiPoly> comp;

    static PolyForm zero_form(int nvars, int k) { return PolyForm{nvars, k, {}}; }
    static PolyForm scalar(const MultiPoly& f) { return PolyForm{f.nvars(), 0, {{{}, f}}}; }
    // one-form sum_i values[i] x_i^*
    static PolyForm one_form(std::vector<MultiPoly> values);

    void add(const std::vector<int>& subset, const MultiPoly& f);
    MultiPoly at(const std::vector<int>& subset) const;
    bool is_zero() const;
    bool operator==(const PolyForm& o) const;
    PolyForm operator+(const PolyForm& o) const;
    PolyForm operator*(const Rational& c) const;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);

// contraction with an operator tuple: (alpha -| phi)_J = sum_{i not in J}
// sgn(i, J) op(i, phi_{J u i}); the tuple must be S_n-equivariant.
PolyForm contract_with(const PolyForm& phi,
                       const std::function<MultiPoly(int, const MultiPoly&)>& op);

// exterior derivative via the Dunkl tuple (c-independent on invariant forms)
PolyForm nabla_form(const DunklContext& ctx, const PolyForm& phi);

// contraction with the polynomial tuple (x_i^N)
PolyForm contract_alpha_n(const PolyForm& phi, int N);

// d_N machinery on the associated graded of Hom_{S_n}(Lambda^* h, L_{m/n}).
//
// A one-form of operators is described by its value matrices L(d) -> L(d+s);
// d_N uses (x_i - xbar)^N for N > 0, the Dunkl powers D_i^N for N < 0, and
// the degree-zero beta_0 for N = 0.
class Differentials {
public:
    explicit Differentials(const FilteredRep& filt);

    const FilteredRep& filtration() const { return filt_; }

    // gr piece of Hom(Lambda^k h, gr_f L(d)); dims match gr hook mults
    int gr_dim(int k, int d, int f) const;

    // gr-level matrix of d_N from (k, d, f) to (k-1, d+N, f+shift(N))
    QMat dn_gr_block(int N, int k, int d, int f) const;
    static int filtration_shift(int N) { return N == 0 ? 2 : std::abs(N); }

    bool dn_squared_zero(int N) const;
    bool anticommute(int N, int M) const;

    // homology of d_1 on the associated graded, as a triply graded table
    TriplyGraded dn_homology(int N) const;

    // Phi exchanges d_1 and d_{-1} up to one global sign
    bool fourier_exchange_check() const;

private:
    struct HomSpace {
        std::vector<QMat> basis;   // tensors: rows = k-subsets, cols = L(d) coords
        QMat flat;                  // nb x (nsub * dim)
        // adapted coordinate rows grouped by filtration level
        std::vector<QVec> adapted;  // rows in R^nb
        std::vector<int> level;     // level of each adapted row
        QMat adapted_mat;           // adapted rows stacked
    };

    const FilteredRep& filt_;
    std::vector<std::vector<HomSpace>> hom_;  // [k][d]

    const HomSpace& hom(int k, int d) const;
    // matrix of the contraction in adapted coordinates, with the target level
    // filtered check; alpha given by value matrices
    QMat contraction_matrix(int k, int d, int shift,
                            const std::function<QMat(int, int)>& value) const;
    std::function<QMat(int, int)> alpha_values(int N) const;
};

}  // namespace daha
