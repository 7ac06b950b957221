#pragma once

#include <map>

#include "daha/symfunc.hpp"
#include "daha/trigraded.hpp"

namespace daha {

// Modified Macdonald polynomials H~_mu for |mu| <= cap, solved from the two
// triangularity conditions and the <H~, s_(n)> = 1 normalization.  Schur
// coefficients are honest polynomials in q, t (q,t-Kostka).
class MacdonaldTable {
public:
    explicit MacdonaldTable(int cap = 7);

    int cap() const { return cap_; }
    const SymFunc& modified_macdonald(const Partition& mu) const;  // Schur basis

    // expansion of f in the H~ basis / back
    std::map<Partition, QTScalar> to_macdonald(const SymFunc& f) const;
    SymFunc from_macdonald(const std::map<Partition, QTScalar>& coef) const;

    // nabla^power, eigenvalue q^{n(mu')} t^{n(mu)} on H~_mu; power may be < 0
    SymFunc nabla(const SymFunc& f, int power = 1) const;

    bool omega_duality_check(const Partition& mu) const;
    bool transpose_symmetry_check(const Partition& mu) const;
    // sum_k a^k <H~_mu, s_{n-k,1^k}> = prod_{c != (0,0)} (1 + a q^{a'} t^{l'})
    bool hook_product_check(const Partition& mu) const;

private:
    int cap_;
    std::map<Partition, SymFunc> table_;
};

QTPoly pi_mu(const Partition& mu);  // prod_{c != (0,0)} (1 - q^{a'} t^{l'})
QTPoly b_mu(const Partition& mu);   // sum_c q^{a'} t^{l'}
QTPoly b_mu_inverted(const Partition& mu);  // B_mu(1/q, 1/t)

// e_n expanded in the H~ basis per the closed formula.
std::map<Partition, QTScalar> e_n_expansion(const MacdonaldTable& table, int n);

// Bigraded Frobenius character of L_{(kn+1)/n}: omega(nabla^k e_n).  (The
// trace formula of the representation pins the omega twist; see tests.)
SymFunc nabla_character_plus(const MacdonaldTable& table, int k, int n);

// Bigraded Frobenius character of L_{(kn-1)/n}: omega(nabla^k h_n),
// validated against the representation (see tests and ledger).
SymFunc nabla_character_minus(const MacdonaldTable& table, int k, int n);

// The printed closed formula for ch L_{(kn-1)/n} (nabla-power with inverted
// B_mu); kept verbatim for the comparison report.
SymFunc nabla_character_minus_printed(const MacdonaldTable& table, int k, int n);

// Validated bigraded character for m = kn +- 1 (throws otherwise).
SymFunc nabla_character(const MacdonaldTable& table, int m, int n);

// Singly-graded specialization: t -> 1/q on Schur coefficients; exponents
// shift to internal degrees.  Returns per-internal-degree class data as a
// map degree -> SymFunc with rational coefficients matching FiniteRep
// Frobenius characters when the character is correct.
std::map<int, SymFunc> specialize_bigraded(const SymFunc& ch_schur);

// Hook coefficients assembled into the (a, q, t) conventions of the DAHA
// superpolynomial: monomial q^i t^j of <ch, s_{n-k,1^k}> contributes the
// generator (mu + 2k, 2(i-j), 2i + k(k+2)) with mu = (m-1)(n-1).
//
// The (a, q) bigrading always agrees with the filtration pipeline.  The
// t-exponent rule is exact for n = 2 but cannot be exact for n >= 3: the
// homology t-grading of a generator is not a function of its Macdonald
// bidegree (L_{4/3} spherical, bidegree (1,1), is the counterexample), so
// comparisons for n >= 3 should marginalize t.
TriplyGraded hook_superpoly(const SymFunc& ch_schur, int m, int n);

// (a, q) content with t summed out, for cross-method comparisons.
std::map<std::pair<int, int>, long long> aq_collapse(const TriplyGraded& h);

}  // namespace daha
