#pragma once

#include <array>
#include <map>
#include <sstream>
#include <string>

#include "daha/characters.hpp"

namespace daha {

// Integer multiplicities indexed by (a, q, t) degrees.
class TriplyGraded {
public:
    using Key = std::array<int, 3>;

    TriplyGraded() = default;

    void add(int a, int q, int t, long long mult) {
        if (mult == 0) return;
        Key k{a, q, t};
        auto it = coef_.find(k);
        if (it == coef_.end()) coef_.emplace(k, mult);
        else {
            it->second += mult;
            if (it->second == 0) coef_.erase(it);
        }
    }

    const std::map<Key, long long>& terms() const { return coef_; }
    bool is_zero() const { return coef_.empty(); }
    long long total() const {
        long long t = 0;
        for (const auto& [k, c] : coef_) t += c;
        return t;
    }
    bool operator==(const TriplyGraded& o) const { return coef_ == o.coef_; }
    bool operator!=(const TriplyGraded& o) const { return !(*this == o); }

    bool all_positive() const {
        for (const auto& [k, c] : coef_)
            if (c < 0) return false;
        return true;
    }

    TriplyGraded shift(int da, int dq, int dt) const {
        TriplyGraded r;
        for (const auto& [k, c] : coef_) r.add(k[0] + da, k[1] + dq, k[2] + dt, c);
        return r;
    }

    HomflyPoly specialize_t_minus_one() const {
        HomflyPoly p;
        for (const auto& [k, c] : coef_)
            p.add(k[0], k[1], (k[2] % 2 == 0) ? c : -c);
        return p;
    }

    std::string to_string() const {
        if (coef_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [k, c] : coef_) {
            if (!first) os << " + ";
            if (c != 1) os << c << "*";
            os << "a^" << k[0] << "*q^" << k[1] << "*t^" << k[2];
            first = false;
        }
        return os.str();
    }

private:
    std::map<Key, long long> coef_;
};

}  // namespace daha
