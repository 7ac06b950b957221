#pragma once

#include <map>

#include "daha/differentials.hpp"
#include "daha/symfunc.hpp"
#include "daha/trigraded.hpp"

namespace daha {

// The stable algebra Lambda^*(xi_1..xi_{n-1}) (x) C[u_1..u_{n-1}] with
// gradings xi_i: (a,q,t) = (2, 2i, 2i+1), u_i: (0, 2i+2, 2i), and the
// explicit stable differentials d_N(xi_k) = sum over compositions of k
// into N parts of u_{j_1}...u_{j_N} (reduced: parts >= 1), d_N(u_i) = 0.
class StableAlgebra {
public:
    StableAlgebra(int n, int qmax);

    int n() const { return n_; }
    int qmax() const { return qmax_; }

    struct Monomial {
        unsigned mask;           // xi subset, bit i-1 for xi_i
        std::vector<int> upow;   // exponents of u_1..u_{n-1}
        bool operator<(const Monomial& o) const {
            return std::tie(mask, upow) < std::tie(o.mask, o.upow);
        }
    };

    std::array<int, 3> grading(const Monomial& mono) const;  // (a, q, t)
    const std::vector<Monomial>& monomials() const { return monos_; }
    TriplyGraded poincare() const;

    // d_N of a single monomial, as a sparse combination
    std::map<Monomial, Rational> apply_dn(int N, const Monomial& mono, bool reduced = true) const;

    // homology of d_N in all (a,q,t) blocks with q <= qbound (qbound must
    // leave room for the outgoing differential inside qmax)
    TriplyGraded homology(int N, int qbound) const;

private:
    int n_, qmax_;
    std::vector<Monomial> monos_;
    std::map<Monomial, size_t> index_;
};

// d_N(xi_k) as exponent vectors of u with multiplicities: compositions of k
// into N parts (>= 1 when reduced, >= 0 with u_0 in the unreduced variant,
// where index 0 is allowed and tracked separately by the caller).
std::map<std::vector<int>, long> stable_d_xi(int n, int N, int k, bool reduced = true);

// collapse to the sl_N double grading: (a, q, t) -> (q + N a, t)
std::map<std::pair<int, int>, long long> sl_collapse(const TriplyGraded& h, int N);

// closed form u_k = sum_{lambda |- k+1} a_{k+1}(lambda) F_n(lambda) e_lambda
// evaluated on centered variables (e_1 = 0); also available as an e-basis
// symmetric function with coefficients rational in n via the same data.
MultiPoly u_closed_form(int n, int k);
SymFunc u_closed_form_sym(int k);  // e-basis, coefficients a_{k+1}(lambda) (F_n left symbolic)

// full-variable u_j from the generating function -ln Ebar(z) (paper signs);
// u_0 = e_1/n
MultiPoly u_full(int n, int j);

// xi_i = nabla u_i / (i+1) as a polynomial one-form (plain derivatives)
PolyForm xi_from_u(int n, int i);

// stable contractions: del_1 = contraction with (x_i); del_{-j} =
// (-1)^{j+1} (contraction with the j-th Dunkl-lowering powers)
MultiPoly del_plus1(const PolyForm& phi);
PolyForm del_minus(const PolyForm& phi, int j);

// characterization checks of Prop (uniqueness of u_k / xi_i)
bool u_characterization_check(int n, int k);
bool xi_characterization_check(int n, int i);

// alpha_1 * xi_k = sum_{i=0}^k u_i xi_{k-i} + (n-k-1) xi_{k+1} in full
// variables (componentwise polynomial identity)
bool a1_star_identity(int n, int k);

// plain exterior derivative on polynomial forms and the W top form
PolyForm nabla_plain(const PolyForm& phi);
PolyForm w_top_form(int n);

// nabla kills the Dunkl-derived top forms: nabla(del_{-I} W) = 0
bool nabla_w_check(int n);

}  // namespace daha
