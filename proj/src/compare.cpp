#include "daha/compare.hpp"

#include <chrono>
#include <sstream>

#include <json.hpp>

namespace daha {

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::Mismatch: return "mismatch";
        default: return "not-applicable";
    }
}

bool ComparisonReport::has_mismatch() const {
    for (const auto& e : entries)
        if (e.verdict == Verdict::Mismatch) return true;
    return false;
}

std::string ComparisonReport::to_text() const {
    std::ostringstream os;
    os << "compare T(" << m << "," << n << "): dim " << total_dim << ", spherical "
       << spherical_dim << ", " << seconds << "s\n";
    for (const auto& e : entries) {
        os << "  [" << verdict_name(e.verdict) << "] " << e.name;
        if (!e.detail.empty()) os << " -- " << e.detail;
        os << "\n";
    }
    return os.str();
}

std::string ComparisonReport::to_json() const {
    nlohmann::json j;
    j["m"] = m;
    j["n"] = n;
    j["total_dim"] = total_dim;
    j["spherical_dim"] = spherical_dim;
    j["seconds"] = seconds;
    nlohmann::json entries_json = nlohmann::json::array();
    for (const auto& e : entries) {
        nlohmann::json ej;
        ej["name"] = e.name;
        ej["verdict"] = verdict_name(e.verdict);
        if (!e.detail.empty()) ej["detail"] = e.detail;
        entries_json.push_back(std::move(ej));
    }
    j["checks"] = std::move(entries_json);
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [k, c] : daha.terms())
        terms.push_back({{"a", k[0]}, {"q", k[1]}, {"t", k[2]}, {"mult", c}});
    j["superpolynomial"] = std::move(terms);
    return j.dump(2);
}

ComparisonReport compare_methods(const FiniteRep& rep, int macdonald_cap) {
    auto t0 = std::chrono::steady_clock::now();
    ComparisonReport rpt;
    rpt.m = rep.m();
    rpt.n = rep.n();
    rpt.total_dim = rep.total_dim();
    for (const auto& [d, mult] : rep.isotypic_dims(Partition({rep.n()})))
        rpt.spherical_dim += mult;

    auto add = [&](const std::string& name, Verdict v, const std::string& detail = "") {
        rpt.entries.push_back({name, v, detail});
    };

    // dimension laws
    long expect_dim = 1;
    for (int i = 0; i < rep.n() - 1; ++i) expect_dim *= rep.m();
    add("dim = m^{n-1}", rpt.total_dim == expect_dim ? Verdict::Match : Verdict::Mismatch);
    long catalan = (long)mpz_class(rational_catalan(rep.m(), rep.n())).get_si();
    add("spherical dim = rational Catalan",
        rpt.spherical_dim == catalan ? Verdict::Match : Verdict::Mismatch);

    // HOMFLY: closed hook formula vs Euler characteristic of the rep
    rpt.homfly = homfly_torus_closed(rep.m(), rep.n());
    add("homfly closed = homfly from rep",
        rpt.homfly == homfly_from_rep(rep) ? Verdict::Match : Verdict::Mismatch);

    // trace formula per cycle type
    {
        bool ok = true;
        for (const auto& type : all_partitions(rep.n()))
            if (graded_trace(rep, type) != trace_formula_closed(rep.m(), rep.n(), type)) {
                ok = false;
                break;
            }
        add("trace product formula", ok ? Verdict::Match : Verdict::Mismatch);
    }

    // DAHA filtration superpolynomial
    FilteredRep filt(rep);
    rpt.daha = filt.superpolynomial();
    add("superpoly |_{t=-1} = homfly",
        rpt.daha.specialize_t_minus_one() == rpt.homfly ? Verdict::Match : Verdict::Mismatch);
    {
        std::string audit;
        add("fourier q-degree symmetry of gr dims",
            filt.symmetry_audit(&audit) ? Verdict::Match : Verdict::Mismatch, audit);
    }

    // combinatorial formula
    {
        TriplyGraded jc = jcfull_superpoly(rep.m(), rep.n());
        auto converted = jcfull_to_daha(jc, rep.m(), rep.n());
        if (!converted) {
            add("jcfull / daha dictionary", Verdict::Mismatch,
                "division by the unreduced factor failed");
        } else {
            rpt.comb = *converted;
            add("jcfull = daha superpoly",
                *converted == rpt.daha ? Verdict::Match : Verdict::Mismatch);
        }
    }

    // Macdonald route for m = kn +- 1
    bool plus = rep.m() % rep.n() == 1;
    bool minus = rep.m() % rep.n() == rep.n() - 1;
    if ((plus || minus) && rep.n() <= macdonald_cap && rep.n() >= 2 && rep.m() > 1) {
        MacdonaldTable table(rep.n());
        SymFunc ch = nabla_character(table, rep.m(), rep.n());
        // singly graded character agreement
        bool graded_ok = true;
        auto graded = specialize_bigraded(ch);
        for (int d = 0; d <= rep.top_degree() && graded_ok; ++d) {
            auto it = graded.find(d - rep.delta());
            SymFunc got = (it == graded.end()) ? SymFunc(SFBasis::Schur) : it->second;
            if (!(got == rep.frobenius(d))) graded_ok = false;
        }
        add("macdonald character = graded Frobenius",
            graded_ok ? Verdict::Match : Verdict::Mismatch,
            plus ? "omega nabla^k e_n" : "omega nabla^k h_n");
        TriplyGraded mac = hook_superpoly(ch, rep.m(), rep.n());
        rpt.macdonald = mac;
        add("macdonald hooks: (a,q) bigraded content",
            aq_collapse(mac) == aq_collapse(rpt.daha) ? Verdict::Match : Verdict::Mismatch);
        if (rep.n() == 2) {
            add("macdonald hooks: full (a,q,t)",
                mac == rpt.daha ? Verdict::Match : Verdict::Mismatch);
        } else {
            add("macdonald hooks: full (a,q,t)", Verdict::NotApplicable,
                "t-dictionary is exact only for n = 2; see README");
        }
        // the paper's printed closed formula for kn - 1 (report only)
        if (minus) {
            SymFunc printed = nabla_character_minus_printed(table, (rep.m() + 1) / rep.n(),
                                                            rep.n());
            bool printed_ok = true;
            auto pg = specialize_bigraded(printed);
            for (int d = 0; d <= rep.top_degree() && printed_ok; ++d) {
                auto it = pg.find(d - rep.delta());
                SymFunc got = (it == pg.end()) ? SymFunc(SFBasis::Schur) : it->second;
                if (!(got == rep.frobenius(d))) printed_ok = false;
            }
            // informational: reports on the source formula, not on this
            // artifact's pipelines, so a disagreement is recorded rather
            // than failing the run
            add("printed (kn-1)/n closed formula",
                printed_ok ? Verdict::Match : Verdict::NotApplicable,
                printed_ok ? "" : "disagrees with the representation; using omega nabla^k h_n");
        }
    } else {
        add("macdonald route", Verdict::NotApplicable,
            "m != kn +- 1 (mod n) or beyond the table cap");
    }

    rpt.seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rpt;
}

}  // namespace daha
