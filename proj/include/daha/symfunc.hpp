#pragma once

#include <map>

#include "daha/partition.hpp"
#include "daha/qlaurent.hpp"
#include "daha/qt.hpp"

namespace daha {

enum class SFBasis { Power, Elementary, Homogeneous, Schur };

// Symmetric function with QTScalar coefficients, tagged by basis.
// Keys are partitions; the empty partition carries the constant term.
class SymFunc {
public:
    SymFunc() : basis_(SFBasis::Power) {}
    explicit SymFunc(SFBasis b) : basis_(b) {}

    static SymFunc p(int k);
    static SymFunc e(int k);
    static SymFunc h(int k);
    static SymFunc s(const Partition& lam);
    static SymFunc one(SFBasis b = SFBasis::Power);

    SFBasis basis() const { return basis_; }
    const std::map<Partition, QTScalar>& coef() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    QTScalar coeff(const Partition& mu) const;
    void set_coeff(const Partition& mu, const QTScalar& c);
    void add_coeff(const Partition& mu, const QTScalar& c);

    SymFunc operator+(const SymFunc& o) const;
    SymFunc operator-(const SymFunc& o) const;
    SymFunc operator*(const SymFunc& o) const;   // converts to a common basis
    SymFunc operator*(const QTScalar& c) const;
    bool operator==(const SymFunc& o) const;     // compares in Schur basis
    bool operator!=(const SymFunc& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    SFBasis basis_;
    std::map<Partition, QTScalar> coef_;
};

// Degree cap for basis conversions (transition tables grow with partition
// count).  Default 10.
int symfunc_degree_cap();
void set_symfunc_degree_cap(int cap);

SymFunc to_basis(const SymFunc& f, SFBasis target);

// Hall pairing: Schur basis orthonormal, <p_lam, p_mu> = delta * z_lam.
QTScalar hall_pairing(const SymFunc& f, const SymFunc& g);

// omega involution: p_k -> (-1)^{k-1} p_k, s_lam -> s_lam'.
SymFunc omega(const SymFunc& f);

enum class PhiKind { OneMinusQ, InvOneMinusQ, OneMinusT, InvOneMinusT };

// phi ring homomorphisms p_k -> (1 - q^k)^{+-1} p_k etc.
SymFunc phi_substitution(const SymFunc& f, PhiKind which);

// Evaluate ch with p_i -> 1 - u^i, divide by 1 - u.  For an S_n character
// this is sum_k (-u)^k dim Hom(Lambda^k h, L); coefficients must be rational
// constants.  Result is a polynomial in u (QLaurent exponents = u powers).
QLaurent exterior_generating_eval(const SymFunc& ch);

// Frobenius character of the irreducible V_lambda (= s_lambda), and of a
// class function given by traces per cycle type.
SymFunc frobenius_from_traces(int n, const std::map<Partition, Rational>& traces);

}  // namespace daha
