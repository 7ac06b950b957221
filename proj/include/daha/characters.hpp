#pragma once

#include <map>
#include <string>

#include "daha/lrep.hpp"
#include "daha/partition.hpp"
#include "daha/qlaurent.hpp"

namespace daha {

// Integer Laurent polynomial in a and q.  The q exponent lives on the
// homology lattice (twice the internal grading), so the trefoil reads
// a^2 q^{-2} + a^2 q^2 - a^4.
class HomflyPoly {
public:
    HomflyPoly() = default;

    const std::map<std::pair<int, int>, long long>& terms() const { return coef_; }
    void add(int a, int q, long long c);
    bool is_zero() const { return coef_.empty(); }
    bool operator==(const HomflyPoly& o) const { return coef_ == o.coef_; }
    bool operator!=(const HomflyPoly& o) const { return !(*this == o); }
    HomflyPoly operator-(const HomflyPoly& o) const;

    // substitute a -> q^N (adds N * a-exponent to the q exponent)
    QLaurent specialize_a(int N) const;
    // divide by the monomial a^da q^dq
    HomflyPoly shift(int da, int dq) const;
    int min_a() const;
    int max_a() const;

    std::string to_string() const;

private:
    std::map<std::pair<int, int>, long long> coef_;
};

// Closed hook formula: P = sum_k (-1)^k a^{mu+2k} [m+n-k-1]_q! /
// ([m]_q [n]_q [k]_q! [n-k-1]_q! [m-k-1]_q!), exact q-integer arithmetic.
HomflyPoly homfly_torus_closed(int m, int n);

// Euler characteristic of the representation: multiplicities of the hook
// representations per degree, assembled with q = 2d - mu.
HomflyPoly homfly_from_rep(const FiniteRep& rep);

// Graded trace of a permutation of the given cycle type per the closed
// product formula q^{-delta} (1-q)/(1-q^m) prod_i ((1-q^{mi})/(1-q^i))^{k_i};
// exponents are internal degrees.
QLaurent trace_formula_closed(int m, int n, const Partition& type);

// Graded trace from the representation, same lattice.
QLaurent graded_trace(const FiniteRep& rep, const Partition& type);

// det(1 - q sigma) on the reflection representation:
// (1/(1-q)) prod_i (1 - q^{mu_i}); plain q powers.
QLaurent reflection_det(const Partition& type);

}  // namespace daha
