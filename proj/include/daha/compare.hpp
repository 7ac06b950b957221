#pragma once

#include <optional>
#include <string>
#include <vector>

#include "daha/comb.hpp"
#include "daha/filtration.hpp"
#include "daha/macdonald.hpp"

namespace daha {

enum class Verdict { Match, Mismatch, NotApplicable };

// Cross-method comparison for one torus knot: the DAHA filtration pipeline,
// the combinatorial JCfull formula, the Macdonald character route, and the
// closed HOMFLY formula.  Verdicts are tri-state and never coerced.
struct ComparisonReport {
    int m = 0, n = 0;
    struct Entry {
        std::string name;
        Verdict verdict;
        std::string detail;
    };
    std::vector<Entry> entries;

    TriplyGraded daha;
    std::optional<TriplyGraded> comb;
    std::optional<TriplyGraded> macdonald;
    HomflyPoly homfly;
    long total_dim = 0;
    long spherical_dim = 0;
    double seconds = 0;

    bool has_mismatch() const;
    std::string to_text() const;
    std::string to_json() const;
};

// Runs every applicable pipeline; macdonald_cap bounds the Macdonald table.
ComparisonReport compare_methods(const FiniteRep& rep, int macdonald_cap = 7);

const char* verdict_name(Verdict v);

}  // namespace daha
