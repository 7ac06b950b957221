// Command-line driver: builds and caches the representations, prints the
// various invariants, and runs the cross-method comparison harness.
//
// Exit codes: 0 success, 1 usage/cache error, 2 comparison mismatch,
// 3 resource guard tripped.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "daha/compare.hpp"
#include "daha/differentials.hpp"
#include "daha/stable.hpp"

using namespace daha;
namespace fs = std::filesystem;

namespace {

constexpr long kDimCeiling = 5000;

struct GlobalOpts {
    std::string cache_dir;
    bool json = false;
    bool force = false;
};

std::string cache_path(const GlobalOpts& g, int m, int n) {
    return g.cache_dir + "/rep_" + std::to_string(m) + "_" + std::to_string(n) + "_v1.json";
}

long predicted_dim(int m, int n) {
    long d = 1;
    for (int i = 0; i < n - 1; ++i) d *= m;
    return d;
}

void guard_inputs(int m, int n, bool force) {
    if (m < 1 || n < 2 || std::gcd(m, n) != 1) {
        std::cerr << "error: need coprime m >= 1, n >= 2 (got " << m << ", " << n << ")\n";
        std::exit(1);
    }
    if (!force && predicted_dim(m, n) > kDimCeiling) {
        std::cerr << "error: dim L = " << predicted_dim(m, n) << " exceeds the ceiling "
                  << kDimCeiling << "; pass --force to proceed\n";
        std::exit(3);
    }
}

FiniteRep load_or_build(const GlobalOpts& g, int m, int n, bool force) {
    guard_inputs(m, n, force);
    std::string path = cache_path(g, m, n);
    if (fs::exists(path)) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        try {
            return FiniteRep::from_json(ss.str());
        } catch (const std::exception& e) {
            std::cerr << "error: cache file " << path << " unusable (" << e.what()
                      << "); delete it to rebuild\n";
            std::exit(1);
        }
    }
    FiniteRep rep = FiniteRep::build(m, n);
    fs::create_directories(g.cache_dir);
    std::ofstream out(path);
    out << rep.to_json();
    return rep;
}

nlohmann::json trigraded_json(const TriplyGraded& h) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [k, c] : h.terms())
        arr.push_back({{"a", k[0]}, {"q", k[1]}, {"t", k[2]}, {"mult", c}});
    return arr;
}

void print_trigraded(const TriplyGraded& h, bool json) {
    if (json) {
        std::cout << trigraded_json(h).dump(2) << "\n";
    } else {
        for (const auto& [k, c] : h.terms())
            std::cout << "a^" << k[0] << " q^" << k[1] << " t^" << k[2] << "  x" << c << "\n";
        std::cout << "total " << h.total() << "\n";
    }
}

Partition parse_mu(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) parts.push_back(std::stoi(tok));
    return Partition(parts);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"torus-knot homology from rational Cherednik representations"};
    app.require_subcommand(1);

    GlobalOpts g;
    const char* env_cache = std::getenv("CACHE_DIR");
    g.cache_dir = env_cache ? env_cache : ".daha-cache";
    app.add_option("--cache-dir", g.cache_dir, "representation cache directory");
    app.add_flag("--json", g.json, "JSON output");
    app.add_flag("--force", g.force, "override the dimension resource guard");

    int m = 0, n = 0;

    auto* rep_cmd = app.add_subcommand("rep", "build L_{m/n}, cache it, print dimensions");
    rep_cmd->add_option("m", m)->required();
    rep_cmd->add_option("n", n)->required();

    auto* homfly_cmd = app.add_subcommand("homfly", "closed formula vs Euler characteristic");
    homfly_cmd->add_option("m", m)->required();
    homfly_cmd->add_option("n", n)->required();

    std::string method = "daha";
    auto* super_cmd = app.add_subcommand("superpoly", "triply graded superpolynomial");
    super_cmd->add_option("--method", method, "daha | macdonald | comb")
        ->check(CLI::IsMember({"daha", "macdonald", "comb"}));
    super_cmd->add_option("m", m)->required();
    super_cmd->add_option("n", n)->required();

    int Nval = 1;
    auto* dn_cmd = app.add_subcommand("dn", "homology of d_N on gr H as JSON");
    dn_cmd->add_option("m", m)->required();
    dn_cmd->add_option("n", n)->required();
    dn_cmd->add_option("N", Nval)->required();

    int sn = 2, sN = 1, qmax = 20;
    bool collapse = false;
    auto* stable_cmd = app.add_subcommand("stable", "stable sl_N homology of T(n, infinity)");
    stable_cmd->add_option("--n", sn, "strand count")->required();
    stable_cmd->add_option("--N", sN, "differential index")->required();
    stable_cmd->add_option("--qmax", qmax, "q-degree bound")->required();
    stable_cmd->add_flag("--collapse", collapse, "collapse to the sl_N double grading");

    std::string mu_text;
    auto* mac_cmd = app.add_subcommand("macdonald", "modified Macdonald polynomial");
    mac_cmd->add_option("--mu", mu_text, "partition, e.g. 2,1")->required();

    auto* comb_cmd = app.add_subcommand("comb", "combinatorial model");
    std::string comb_what;
    bool count_only = false, stats = false;
    comb_cmd->add_option("what", comb_what, "superpoly | parking | diagrams")->required();
    comb_cmd->add_option("m", m)->required();
    comb_cmd->add_option("n", n)->required();
    comb_cmd->add_flag("--count", count_only);
    comb_cmd->add_flag("--stats", stats);

    auto* compare_cmd = app.add_subcommand("compare", "cross-method comparison report");
    compare_cmd->add_option("m", m)->required();
    compare_cmd->add_option("n", n)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (rep_cmd->parsed()) {
            FiniteRep rep = load_or_build(g, m, n, g.force);
            if (g.json) {
                nlohmann::json j;
                j["m"] = m;
                j["n"] = n;
                j["total_dim"] = rep.total_dim();
                nlohmann::json dims = nlohmann::json::array();
                for (int d = 0; d <= rep.top_degree(); ++d) dims.push_back(rep.dim(d));
                j["dims"] = dims;
                nlohmann::json hooks;
                for (int k = 0; k < rep.n(); ++k) {
                    nlohmann::json h;
                    for (const auto& [d, mult] : rep.isotypic_dims(hook_partition(n, k)))
                        h[std::to_string(d)] = mult;
                    hooks["hook_" + std::to_string(k)] = h;
                }
                j["hook_isotypic"] = hooks;
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << "L_{" << m << "/" << n << "}: total dim " << rep.total_dim()
                          << " = m^{n-1}\n";
                std::cout << "degree:";
                for (int d = 0; d <= rep.top_degree(); ++d) std::cout << " " << rep.dim(d);
                std::cout << "\n";
                for (int k = 0; k < rep.n(); ++k) {
                    std::cout << "hook " << k << " (Lambda^" << k << " h):";
                    long total = 0;
                    for (const auto& [d, mult] : rep.isotypic_dims(hook_partition(n, k))) {
                        std::cout << " d" << d << ":" << mult;
                        total += mult;
                    }
                    std::cout << "  (total " << total << ")\n";
                }
                std::cout << "cache: " << cache_path(g, m, n) << "\n";
            }
        } else if (homfly_cmd->parsed()) {
            guard_inputs(m, n, g.force);
            HomflyPoly closed = homfly_torus_closed(m, n);
            FiniteRep rep = load_or_build(g, m, n, g.force);
            HomflyPoly from_rep = homfly_from_rep(rep);
            std::cout << "closed:   " << closed.to_string() << "\n";
            std::cout << "from rep: " << from_rep.to_string() << "\n";
            HomflyPoly diff = closed - from_rep;
            std::cout << "diff:     " << diff.to_string() << "\n";
            if (!diff.is_zero()) return 2;
        } else if (super_cmd->parsed()) {
            guard_inputs(m, n, g.force);
            TriplyGraded h;
            if (method == "daha") {
                FilteredRep filt(load_or_build(g, m, n, g.force));
                h = filt.superpolynomial();
            } else if (method == "comb") {
                auto conv = jcfull_to_daha(jcfull_superpoly(m, n), m, n);
                if (!conv) {
                    std::cerr << "error: jcfull not divisible by the unreduced factor\n";
                    return 2;
                }
                h = *conv;
            } else {
                if (!(m % n == 1 || m % n == n - 1) || m == 1) {
                    std::cerr << "error: macdonald method needs m = kn +- 1, m > 1\n";
                    return 1;
                }
                MacdonaldTable table(n);
                h = hook_superpoly(nabla_character(table, m, n), m, n);
                if (n > 2)
                    std::cerr << "note: for n > 2 only the (a,q) bigrading of this output "
                                 "matches the homology; see README\n";
            }
            print_trigraded(h, g.json);
        } else if (dn_cmd->parsed()) {
            guard_inputs(m, n, g.force);
            FilteredRep filt(load_or_build(g, m, n, g.force));
            Differentials diff(filt);
            std::cout << trigraded_json(diff.dn_homology(Nval)).dump(2) << "\n";
        } else if (stable_cmd->parsed()) {
            if (qmax <= 0) {
                std::cerr << "error: qmax must be positive\n";
                return 1;
            }
            StableAlgebra alg(sn, qmax + 2 * std::abs(sN) + 2);
            TriplyGraded h = alg.homology(sN, qmax);
            if (collapse) {
                auto c = sl_collapse(h, sN);
                std::cout << "collapsed_q\tt\tdim\n";
                std::map<int, long long> by_q;
                for (const auto& [k, v] : c) {
                    std::cout << k.first << "\t" << k.second << "\t" << v << "\n";
                    by_q[k.first] += v;
                }
                long long cum = 0;
                for (const auto& [q, v] : by_q) {
                    cum += v;
                    std::cout << "cumulative q<=" << q << ": " << cum << "\n";
                }
            } else {
                print_trigraded(h, g.json);
            }
        } else if (mac_cmd->parsed()) {
            Partition mu = parse_mu(mu_text);
            MacdonaldTable table(std::max(1, mu.size()));
            std::cout << "H~_" << mu.to_string() << " = "
                      << table.modified_macdonald(mu).to_string() << "\n";
        } else if (comb_cmd->parsed()) {
            if (std::gcd(m, n) != 1) {
                std::cerr << "error: need coprime m, n\n";
                return 1;
            }
            if (comb_what == "superpoly") {
                TriplyGraded jc = jcfull_superpoly(m, n);
                std::cout << "jcfull (paper variables):\n";
                print_trigraded(jc, g.json);
                auto conv = jcfull_to_daha(jc, m, n);
                if (conv) {
                    std::cout << "daha variables:\n";
                    print_trigraded(*conv, g.json);
                } else {
                    std::cout << "conversion: division by (1 + a^2 t) inexact\n";
                }
            } else if (comb_what == "parking") {
                if (count_only) {
                    std::cout << parking_count(m, n) << "\n";
                } else {
                    auto pf = enumerate_parking_functions(m, n);
                    for (const auto& f : pf) {
                        for (size_t i = 0; i < f.size(); ++i)
                            std::cout << (i ? "," : "") << f[i];
                        std::cout << "\n";
                    }
                    std::cout << "count " << pf.size() << "\n";
                }
            } else if (comb_what == "diagrams") {
                auto ds = enumerate_diagrams(m, n);
                if (stats) {
                    std::cout << "size\thplus\tbeta\n";
                    for (const auto& d : ds) {
                        std::cout << d.size() << "\t" << d.hplus() << "\t";
                        bool first = true;
                        for (const auto& [p, b] : d.corner_beta()) {
                            std::cout << (first ? "" : ",") << b;
                            first = false;
                        }
                        std::cout << "\n";
                    }
                } else {
                    for (const auto& d : ds) {
                        std::cout << "(";
                        for (size_t i = 0; i < d.rows.size(); ++i)
                            std::cout << (i ? "," : "") << d.rows[i];
                        std::cout << ")\n";
                    }
                }
                std::cout << "count " << ds.size() << "\n";
            } else {
                std::cerr << "error: unknown comb subcommand '" << comb_what << "'\n";
                return 1;
            }
        } else if (compare_cmd->parsed()) {
            guard_inputs(m, n, g.force);
            FiniteRep rep = load_or_build(g, m, n, g.force);
            ComparisonReport rpt = compare_methods(rep);
            std::cout << (g.json ? rpt.to_json() : rpt.to_text());
            if (rpt.has_mismatch()) return 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
