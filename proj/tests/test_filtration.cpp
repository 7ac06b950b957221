#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "daha/filtration.hpp"

using namespace daha;

// T(2,n) model: L_{n/2} = C[u]/(u^n), q(u^k) = 2k - (n-1); even powers have
// a = n-1 and f = (n-1)/2, odd powers a = n+1 and f = (n-3)/2.
static TriplyGraded t2_model(int nn) {
    TriplyGraded out;
    int mu = nn - 1;
    for (int k = 0; k < nn; ++k) {
        int q = 2 * k - (nn - 1);
        int a = (k % 2 == 0) ? nn - 1 : nn + 1;
        int f2 = (k % 2 == 0) ? nn - 1 : nn - 3;  // doubled filtration grading
        int t = (q + mu) / 2 + a / 2 - f2 / 2;
        out.add(a, q, t, 1);
    }
    return out;
}

// T(3,n) model of the paper: monomials u2^a u3^b (du2, du3) with
// a + 3b <= n-1 (and the stated cutoffs), filtration level 2 deg_u - q/2.
static TriplyGraded t3_model(int nn) {
    TriplyGraded out;
    int mu = 2 * (nn - 1);
    auto add = [&](int dega, int degb, int wedge_deg, int k) {
        int d = 2 * dega + 3 * degb + wedge_deg;
        int q = 2 * d - mu;
        int f = 2 * (dega + degb) - q / 2;
        int a = mu + 2 * k;
        int t = (q + mu) / 2 + a / 2 - f;
        out.add(a, q, t, 1);
    };
    for (int b = 0; 3 * b <= nn - 1; ++b)
        for (int a = 0; a + 3 * b <= nn - 1; ++a) {
            add(a, b, 0, 0);                                   // functions
            if (a < nn - 1) add(a, b, 1, 1);                   // ... du2
            if (a + 3 * b <= nn - 4) add(a, b, 2, 1);          // ... du3
            if (a + 3 * b <= nn - 4) add(a, b, 3, 2);          // ... du2 ^ du3
        }
    return out;
}

TEST_CASE("trefoil superpolynomial") {
    FilteredRep f(FiniteRep::build(3, 2));
    TriplyGraded expect;
    expect.add(2, -2, 0, 1);
    expect.add(2, 2, 2, 1);
    expect.add(4, 0, 3, 1);
    CHECK(f.superpolynomial() == expect);
}

TEST_CASE("T(2,n) thin homology") {
    for (int nn : {3, 5, 7, 9}) {
        FilteredRep f(FiniteRep::build(nn, 2));
        TriplyGraded h = f.superpolynomial();
        CHECK(h == t2_model(nn));
        CHECK(delta_thin(h, nn - 1));
        CHECK(h.total() == nn);
    }
}

TEST_CASE("T(3,n) monomial model") {
    for (int nn : {4, 5}) {
        FilteredRep f(FiniteRep::build(nn, 3));
        CHECK(f.superpolynomial() == t3_model(nn));
    }
}

TEST_CASE("superpolynomial specializes to HOMFLY") {
    for (auto [m, n] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 3}, std::pair{5, 3},
                        std::pair{2, 5}}) {
        FilteredRep f(FiniteRep::build(m, n));
        TriplyGraded h = f.superpolynomial();
        CHECK(h.all_positive());
        CHECK(h.specialize_t_minus_one() == homfly_torus_closed(m, n));
        long hom_dim = 0;
        for (int k = 0; k < n; ++k)
            for (int d = 0; d <= f.rep().top_degree(); ++d)
                hom_dim += f.rep().isotypic_mult(hook_partition(n, k), d);
        CHECK(h.total() == hom_dim);
    }
}

TEST_CASE("m-n symmetry of the triply graded output") {
    FilteredRep f34(FiniteRep::build(3, 4)), f43(FiniteRep::build(4, 3));
    CHECK(f34.superpolynomial() == f43.superpolynomial());
}

TEST_CASE("filtration structure") {
    FilteredRep f(FiniteRep::build(4, 3));
    const FiniteRep& rep = f.rep();
    // ideal powers decrease and die
    for (int d = 0; d <= rep.top_degree(); ++d) {
        CHECK(f.ideal_power(0, d).rows() == (size_t)rep.dim(d));
        for (int j = 1; j <= f.ideal_nilpotency(); ++j)
            CHECK(f.ideal_power(j, d).rows() <= f.ideal_power(j - 1, d).rows());
        CHECK(f.ideal_power(f.ideal_nilpotency(), d).rows() == 0);
    }
    // W (the sign vector at degree 3) is not in a*L
    CHECK(f.ideal_power(1, 3).rows() < (size_t)rep.dim(3));

    // Falg increasing, S_n stable, and moved up by at most one step by the
    // algebra generators
    for (int d = 0; d <= rep.top_degree(); ++d) {
        for (int i = f.level_min(); i <= f.level_max(); ++i) {
            const QMat& cur = f.algebraic_f(i, d);
            CHECK(cur.rows() >= f.algebraic_f(i - 1, d).rows());
            for (size_t r = 0; r < cur.rows(); ++r) {
                // S_n stability
                for (int a = 1; a < rep.n(); ++a) {
                    QVec img = rep.adjacent_transposition(a, d).apply(cur.row(r));
                    CHECK(span_contains(cur, img));
                }
                // x and Dunkl raise level by at most one
                if (d < rep.top_degree()) {
                    for (int iy = 1; iy < rep.n(); ++iy) {
                        QVec img = rep.mult_y(iy, d).apply(cur.row(r));
                        CHECK(span_contains(f.algebraic_f(i + 1, d + 1), img));
                    }
                }
                if (d > 0) {
                    for (int iy = 1; iy <= rep.n(); ++iy) {
                        QVec img = rep.dunkl(iy, d).apply(cur.row(r));
                        CHECK(span_contains(f.algebraic_f(i + 1, d - 1), img));
                    }
                }
            }
        }
    }
}

TEST_CASE("fourier symmetry of gr dims") {
    for (auto [m, n] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{4, 3}, std::pair{2, 5}}) {
        FilteredRep f(FiniteRep::build(m, n));
        std::string report;
        bool ok = f.symmetry_audit(&report);
        INFO(report);
        CHECK(ok);
    }
}

TEST_CASE("kostant: C[h].W = a-perp") {
    for (auto [m, n] : {std::pair{3, 2}, std::pair{5, 2}, std::pair{4, 3}, std::pair{5, 3}}) {
        FilteredRep f(FiniteRep::build(m, n));
        CHECK(f.kostant_check());
    }
}

TEST_CASE("gr dims refine isotypic dims") {
    FilteredRep f(FiniteRep::build(5, 3));
    const FiniteRep& rep = f.rep();
    for (const auto& lam : all_partitions(3))
        for (int d = 0; d <= rep.top_degree(); ++d) {
            long total = 0;
            for (int i = f.level_min(); i <= f.level_max(); ++i) total += f.gr_mult(lam, d, i);
            CHECK(total == rep.isotypic_mult(lam, d));
        }
}
