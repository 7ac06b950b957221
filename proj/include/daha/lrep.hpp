#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "daha/dunkl.hpp"
#include "daha/linalg.hpp"
#include "daha/partition.hpp"
#include "daha/qlaurent.hpp"
#include "daha/symfunc.hpp"

namespace daha {

// The finite-dimensional irreducible module L_{m/n} of the rational
// Cherednik algebra at c = m/n, realized degreewise as the quotient of the
// translation-invariant polynomials by the radical of the Dunkl pairing.
//
// Per degree d = 0..(m-1)(n-1) it stores an ordered coset basis (labelled
// by difference monomials), the Gram matrix of the Dunkl pairing, the
// adjacent-transposition action, multiplication by y_i = x_i - x_n, and
// the lowering operators Delta_i = D_i - D_n.
//
// Matrices act on column coordinate vectors; columns index the source basis.
class FiniteRep {
public:
    static FiniteRep build(int m, int n);

    int m() const { return m_; }
    int n() const { return n_; }
    int top_degree() const { return (m_ - 1) * (n_ - 1); }
    int mu() const { return (m_ - 1) * (n_ - 1); }       // mu(K) = a-grading base
    int delta() const { return mu() / 2; }                // internal-grading shift
    int dim(int d) const;
    long total_dim() const;

    const std::vector<ExpVec>& coset_monomials(int d) const { return level(d).monos; }
    const QMat& gram(int d) const { return level(d).gram; }
    const QMat& adjacent_transposition(int a, int d) const;  // s_{a,a+1}, a = 1..n-1
    const QMat& mult_y(int i, int d) const;   // y_i: L(d) -> L(d+1), i = 1..n-1
    const QMat& delta_op(int i, int d) const; // D_i - D_n: L(d) -> L(d-1), i = 1..n-1

    QMat permutation(const std::vector<int>& sigma, int d) const;  // 0-based images
    QMat transposition(int a, int b, int d) const;                 // s_{ab}, 1-based
    QMat dunkl(int i, int d) const;            // D_i on L(d), i = 1..n
    QMat mult_centered(int i, int d) const;    // x_i - xbar: L(d) -> L(d+1)
    QMat mult_power_sum(int k, int d) const;   // p_k(x - xbar): L(d) -> L(d+k)
    QMat mult_poly(const MultiPoly& f, int d) const;  // invariant multiplication
    QMat fourier(int d) const;                 // Phi: L(d) -> L(top-d), exp(e)exp(-f)exp(e)

    // trace of a permutation of the given cycle type on L(d)
    Rational trace(const Partition& type, int d) const;
    // multiplicity of V_lambda in L(d)
    long isotypic_mult(const Partition& lam, int d) const;
    std::map<int, long> isotypic_dims(const Partition& lam) const;
    // graded Frobenius character, one symmetric function per degree
    SymFunc frobenius(int d) const;

    // serialization (versioned JSON, rationals as "p/q" strings)
    std::string to_json() const;
    static FiniteRep from_json(const std::string& text);

private:
    struct Level {
        std::vector<ExpVec> monos;
        QMat gram;
        std::vector<QMat> smat;   // s_{a,a+1} for a = 1..n-1
        std::vector<QMat> ymult;  // y_i: here -> next
        std::vector<QMat> dmat;   // Delta_i: here -> previous
    };

    FiniteRep() = default;
    const Level& level(int d) const;
    Level& level(int d);

    int m_ = 0, n_ = 0;
    std::vector<Level> levels_;

    struct TraceMemo {
        std::mutex mu;
        std::map<std::pair<Partition, int>, Rational> map;
    };
    std::shared_ptr<TraceMemo> memo_ = std::make_shared<TraceMemo>();
};

// Map internal degree <-> polynomial degree: q_hom = 2 d - mu.
inline int q_grading(const FiniteRep& rep, int d) { return 2 * d - rep.mu(); }

// Basis of Hom_{S_n}(Lambda^k h, L(d)) as reduced equivariant tensors in
// Lambda^k hbar* (x) L(d): each element is a matrix whose row indexed by a
// k-subset J of {0..n-1} is the coordinate vector of phi_J.
std::vector<QMat> hom_exterior_basis(const FiniteRep& rep, int k, int d);

// k-subsets of {0..n-1} in lexicographic order (row indexing used above).
std::vector<std::vector<int>> k_subsets(int n, int k);

}  // namespace daha
