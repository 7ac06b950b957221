#pragma once

#include <vector>
#include <cstdint>
#include <string>

#include "daha/rational.hpp"

namespace daha {

// Integer partition, parts weakly decreasing and positive.
// Also doubles as a cycle type when indexing S_n class functions.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;              // |mu|
    int length() const { return (int)parts_.size(); }
    int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; }

    Partition transpose() const;
    // n(mu) = sum (i-1) mu_i = sum of co-legs
    long n_stat() const;

    // Cell statistics; cells are (row, col), 0-based, col < mu_row.
    int arm(int row, int col) const { return parts_[row] - col - 1; }
    int leg(int row, int col) const;
    int coarm(int row, int col) const { return col; }
    int coleg(int row, int col) const { return row; }
    int hook(int row, int col) const { return arm(row, col) + leg(row, col) + 1; }

    // number of parts equal to i (cycle-count accessor for cycle types)
    int count(int i) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const;  // total order for map keys

    std::string to_string() const;

private:
    std::vector<int> parts_;
};

std::vector<Partition> all_partitions(int n);

// mu <= lam in dominance order (partial); both of the same size.
bool dominance_leq(const Partition& mu, const Partition& lam);

// z_mu = prod i^{k_i} k_i!  (order of the centralizer of the cycle type)
Integer z_mu(const Partition& mu);

// |conjugacy class of cycle type mu| in S_n
Integer class_size(const Partition& mu);

// sign of a permutation with cycle type mu
int cycle_type_sign(const Partition& mu);

// Irreducible S_n character chi_lambda evaluated on cycle type mu,
// by the Murnaghan-Nakayama rule (memoized, thread-safe).
long long sn_character(const Partition& lambda, const Partition& mu);

// Number of standard Young tableaux of shape lambda (hook length formula).
Integer count_syt(const Partition& lambda);

// A permutation of {0..n-1} with the given cycle type.
std::vector<int> permutation_of_type(const Partition& mu, int n);

// hook partition (n-k, 1^k)
Partition hook_partition(int n, int k);

}  // namespace daha
