#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/lrep.hpp"
#include "daha/trigraded.hpp"

namespace daha {

// The algebraic filtration on L_{m/n}: the decreasing filtration
// F^i = sum_j (a^j intersect (degrees with internal grading < 2j - i)),
// with a the ideal of positive-degree invariants, dualized degreewise by
// the Dunkl pairing into the increasing filtration Falg_i = (F^i)^perp.
//
// The filtration grading of a class is the first level i where it appears;
// the knot gradings are a = mu + 2k, q = 2d - mu, t = (q + mu)/2 + a/2 - f.
class FilteredRep {
public:
    explicit FilteredRep(FiniteRep rep);

    const FiniteRep& rep() const { return rep_; }

    // image of a^j in L(d), as a row basis
    const QMat& ideal_power(int j, int d) const;
    int ideal_nilpotency() const { return (int)powers_.size() - 1; }  // least j with a^j L = 0

    // decreasing filtration slice F^i(d)
    const QMat& decreasing_f(int i, int d) const;
    // increasing dual Falg_i(d)
    const QMat& algebraic_f(int i, int d) const;
    int level_min() const { return level_min_; }
    int level_max() const { return level_max_; }

    // multiplicity of V_lambda in gr_i L(d) = Falg_i(d)/Falg_{i-1}(d)
    long gr_mult(const Partition& lam, int d, int level) const;

    // triply graded superpolynomial from the hook multiplicities
    TriplyGraded superpolynomial() const;

    // per-isotypic, per-level q-mirror symmetry; exact verdict, optional report
    bool symmetry_audit(std::string* report = nullptr) const;

    // Corollary "C[h].W = a^perp": spans of Dunkl-derivatives of the
    // Vandermonde class against the orthocomplement of a L, degreewise.
    bool kostant_check() const;

private:
    FiniteRep rep_;
    // powers_[j][d]: row basis of a^j L intersect L(d); powers_[0] = full
    std::vector<std::vector<QMat>> powers_;
    int level_min_ = 0, level_max_ = 0;
    // falg_[i - level_min_ + 1][d]; index 0 holds the empty level_min_-1 slice
    std::vector<std::vector<QMat>> falg_;
    std::vector<std::vector<QMat>> fdec_;
    mutable std::map<std::tuple<Partition, int, int>, long> gr_memo_;

    void build();
};

// T(2,n) check helper: every generator has delta-grading a + 2f - mu = n-1.
bool delta_thin(const TriplyGraded& h, int delta);

}  // namespace daha
