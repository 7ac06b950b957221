#include "daha/partition.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace daha {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::transpose() const {
    std::vector<int> t;
    for (int col = 0; !parts_.empty() && col < parts_[0]; ++col) {
        int cnt = 0;
        for (int p : parts_) cnt += (p > col);
        t.push_back(cnt);
    }
    return Partition(std::move(t));
}

long Partition::n_stat() const {
    long s = 0;
    for (size_t i = 0; i < parts_.size(); ++i) s += (long)i * parts_[i];
    return s;
}

int Partition::leg(int row, int col) const {
    int l = 0;
    for (size_t r = row + 1; r < parts_.size() && parts_[r] > col; ++r) ++l;
    return l;
}

int Partition::count(int i) const {
    int c = 0;
    for (int p : parts_) c += (p == i);
    return c;
}

bool Partition::operator<(const Partition& o) const {
    if (size() != o.size()) return size() < o.size();
    return parts_ < o.parts_;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

static void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
    if (n == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

bool dominance_leq(const Partition& mu, const Partition& lam) {
    if (mu.size() != lam.size()) throw std::invalid_argument("dominance: size mismatch");
    int pm = 0, pl = 0;
    int len = std::max(mu.length(), lam.length());
    for (int i = 0; i < len; ++i) {
        pm += mu.part(i);
        pl += lam.part(i);
        if (pm > pl) return false;
    }
    return true;
}

Integer z_mu(const Partition& mu) {
    Integer z = 1;
    int run = 1;
    const auto& p = mu.parts();
    for (size_t i = 0; i < p.size(); ++i) {
        z *= p[i];
        if (i + 1 < p.size() && p[i + 1] == p[i]) {
            ++run;
            z *= run;
        } else {
            run = 1;
        }
    }
    return z;
}

Integer class_size(const Partition& mu) {
    Integer fact = 1;
    for (int i = 2; i <= mu.size(); ++i) fact *= i;
    return fact / z_mu(mu);
}

int cycle_type_sign(const Partition& mu) {
    return ((mu.size() - mu.length()) % 2 == 0) ? 1 : -1;
}

// Murnaghan-Nakayama via beta-numbers: removing a border strip of length r
// from lambda means replacing some beta-number b by b-r (staying distinct);
// the strip height is the number of beta-numbers strictly between b-r and b.
namespace {
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> mn_memo;
std::mutex mn_mutex;
}

static long long mn_rec(const std::vector<int>& lambda, const std::vector<int>& rho) {
    if (rho.empty()) return 1;  // lambda is empty too (sizes match)
    {
        std::lock_guard<std::mutex> lk(mn_mutex);
        auto it = mn_memo.find({lambda, rho});
        if (it != mn_memo.end()) return it->second;
    }
    int r = rho[0];
    std::vector<int> rho_rest(rho.begin() + 1, rho.end());
    int len = (int)lambda.size();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);
    long long total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[i] - r;
        if (b < 0) continue;
        bool clash = false;
        int height = 0;
        for (int j = 0; j < len; ++j) {
            if (j == i) continue;
            if (beta[j] == b) { clash = true; break; }
            if (beta[j] > b && beta[j] < beta[i]) ++height;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nl;
        for (int j = 0; j < len; ++j) {
            int part = nb[j] - (len - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long sub = mn_rec(nl, rho_rest);
        total += (height % 2 == 0) ? sub : -sub;
    }
    std::lock_guard<std::mutex> lk(mn_mutex);
    mn_memo.emplace(std::make_pair(lambda, rho), total);
    return total;
}

long long sn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("sn_character: |lambda| != |mu|");
    return mn_rec(lambda.parts(), mu.parts());
}

Integer count_syt(const Partition& lambda) {
    Integer fact = 1;
    for (int i = 2; i <= lambda.size(); ++i) fact *= i;
    Integer hooks = 1;
    for (int r = 0; r < lambda.length(); ++r)
        for (int c = 0; c < lambda.parts()[r]; ++c) hooks *= lambda.hook(r, c);
    return fact / hooks;
}

std::vector<int> permutation_of_type(const Partition& mu, int n) {
    if (mu.size() != n) throw std::invalid_argument("permutation_of_type: size mismatch");
    std::vector<int> perm(n);
    int base = 0;
    for (int len : mu.parts()) {
        for (int i = 0; i < len; ++i) perm[base + i] = base + (i + 1) % len;
        base += len;
    }
    return perm;
}

Partition hook_partition(int n, int k) {
    if (k < 0 || k >= n) throw std::invalid_argument("hook_partition: bad k");
    std::vector<int> p;
    p.push_back(n - k);
    for (int i = 0; i < k; ++i) p.push_back(1);
    return Partition(std::move(p));
}

}  // namespace daha
