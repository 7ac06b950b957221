#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "daha/lrep.hpp"

#include <numeric>

using namespace daha;

// Independent reduction oracle: the coset coordinates c of a polynomial w
// solve G c = [(b_i, w)]_i with the pairing computed by iterated Dunkl
// application, bypassing the matrix recursion entirely.
static QVec reduce_oracle(const FiniteRep& rep, const MultiPoly& w) {
    int d = w.degree();
    DunklContext ctx = DunklContext::for_rep(rep.m(), rep.n());
    QVec rhs = pairing_column(ctx, rep.coset_monomials(d), w);
    QMat target(1, rhs.size());
    for (size_t i = 0; i < rhs.size(); ++i) target.at(0, i) = rhs[i];
    QMat sol = solve_left(rep.gram(d).transpose(), target);  // G c = rhs, G symmetric
    QVec c(sol.cols());
    for (size_t i = 0; i < sol.cols(); ++i) c[i] = sol.at(0, i);
    return c;
}

static MultiPoly coset_poly(const FiniteRep& rep, int d, int j) {
    return expand_diff_monomial(rep.n(), rep.coset_monomials(d)[j]);
}

TEST_CASE("L_{3/2} is C[u]/(u^3)") {
    FiniteRep rep = FiniteRep::build(3, 2);
    CHECK(rep.top_degree() == 2);
    CHECK(rep.dim(0) == 1);
    CHECK(rep.dim(1) == 1);
    CHECK(rep.dim(2) == 1);
    CHECK(rep.total_dim() == 3);
    // s acts by u -> -u
    CHECK(rep.adjacent_transposition(1, 0).at(0, 0) == Rational(1));
    CHECK(rep.adjacent_transposition(1, 1).at(0, 0) == Rational(-1));
    CHECK(rep.adjacent_transposition(1, 2).at(0, 0) == Rational(1));
    // trace sequence of the transposition over degrees: (1, -1, 1)
    Partition tr({2});
    CHECK(rep.trace(tr, 0) == Rational(1));
    CHECK(rep.trace(tr, 1) == Rational(-1));
    CHECK(rep.trace(tr, 2) == Rational(1));
}

TEST_CASE("dimension law") {
    struct Case { int m, n; };
    for (auto [m, n] : {Case{3, 2}, Case{2, 3}, Case{4, 3}, Case{3, 4}, Case{5, 2}, Case{5, 3}}) {
        FiniteRep rep = FiniteRep::build(m, n);
        long expect = 1;
        for (int i = 0; i < n - 1; ++i) expect *= m;
        CHECK(rep.total_dim() == expect);
        // spherical dimension = rational Catalan number C(m+n, n)/(m+n)
        Integer binom = 1;
        for (int i = 1; i <= n; ++i) binom = binom * (m + n - i + 1) / i;
        long catalan = (long)mpz_class(binom / (m + n)).get_si();
        long sph = 0;
        for (auto& [d, mult] : rep.isotypic_dims(Partition({n}))) sph += mult;
        CHECK(sph == catalan);
    }
}

TEST_CASE("gram matches the pairing oracle") {
    for (auto [m, n] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 3}}) {
        FiniteRep rep = FiniteRep::build(m, n);
        DunklContext ctx = DunklContext::for_rep(m, n);
        for (int d = 0; d <= rep.top_degree(); ++d) {
            QMat oracle = pairing_block(ctx, rep.coset_monomials(d), rep.coset_monomials(d));
            CHECK(rep.gram(d) == oracle);
        }
    }
}

TEST_CASE("operator matrices match the polynomial-level oracle") {
    for (auto [m, n] : {std::pair{3, 2}, std::pair{2, 3}, std::pair{4, 3}}) {
        FiniteRep rep = FiniteRep::build(m, n);
        DunklContext ctx = DunklContext::for_rep(m, n);
        for (int d = 0; d <= rep.top_degree(); ++d) {
            for (int j = 0; j < rep.dim(d); ++j) {
                MultiPoly b = coset_poly(rep, d, j);
                // y_i multiplication
                if (d < rep.top_degree()) {
                    for (int i = 1; i < n; ++i) {
                        MultiPoly yb = b * (MultiPoly::variable(n, i) - MultiPoly::variable(n, n));
                        QVec expect = reduce_oracle(rep, yb);
                        for (int r = 0; r < rep.dim(d + 1); ++r)
                            CHECK(rep.mult_y(i, d).at(r, j) == expect[r]);
                    }
                }
                // Dunkl lowering
                if (d > 0) {
                    for (int i = 1; i <= n; ++i) {
                        MultiPoly db = dunkl_apply(ctx, i, b);
                        if (db.is_zero()) {
                            for (int r = 0; r < rep.dim(d - 1); ++r)
                                CHECK(is_zero(rep.dunkl(i, d).at(r, j)));
                        } else {
                            QVec expect = reduce_oracle(rep, db);
                            for (int r = 0; r < rep.dim(d - 1); ++r)
                                CHECK(rep.dunkl(i, d).at(r, j) == expect[r]);
                        }
                    }
                }
                // adjacent transpositions
                for (int a = 1; a < n; ++a) {
                    std::vector<int> sigma(n);
                    std::iota(sigma.begin(), sigma.end(), 0);
                    std::swap(sigma[a - 1], sigma[a]);
                    QVec expect = reduce_oracle(rep, permute(sigma, b));
                    for (int r = 0; r < rep.dim(d); ++r)
                        CHECK(rep.adjacent_transposition(a, d).at(r, j) == expect[r]);
                }
            }
        }
    }
}

TEST_CASE("L_{4/3} matches the worked picture") {
    FiniteRep rep = FiniteRep::build(4, 3);
    CHECK(rep.total_dim() == 16);
    std::vector<int> dims;
    for (int d = 0; d <= rep.top_degree(); ++d) dims.push_back(rep.dim(d));
    CHECK(dims == std::vector<int>{1, 2, 3, 4, 3, 2, 1});
    // trivial part sits in degrees 0, 2, 3, 4, 6; standard in 1..5; sign at 3
    auto triv = rep.isotypic_dims(Partition({3}));
    CHECK(triv == std::map<int, long>{{0, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}});
    auto stand = rep.isotypic_dims(Partition({2, 1}));
    CHECK(stand == std::map<int, long>{{1, 1}, {2, 1}, {3, 1}, {4, 1}, {5, 1}});
    auto sign = rep.isotypic_dims(Partition({1, 1, 1}));
    CHECK(sign == std::map<int, long>{{3, 1}});
}

TEST_CASE("representation axioms on L_{5/3}") {
    FiniteRep rep = FiniteRep::build(5, 3);
    int n = 3;
    DunklContext ctx = DunklContext::for_rep(5, 3);
    for (int d = 1; d < rep.top_degree(); ++d) {
        // [D_a, x_b] relation as matrices: D_a y_b - y_b D_a on L(d)
        for (int a = 1; a <= n; ++a)
            for (int b = 1; b < n; ++b) {
                QMat lhs = rep.dunkl(a, d + 1) * rep.mult_y(b, d) -
                           rep.mult_y(b, d - 1) * rep.dunkl(a, d);
                // [D_a, y_b] = [D_a, x_b] - [D_a, x_n]
                auto comm = [&](int aa, int bb) {
                    if (aa == bb) {
                        QMat m = QMat::identity(rep.dim(d));
                        for (int j = 1; j <= n; ++j)
                            if (j != aa) m = m - rep.transposition(aa, j, d) * ctx.c;
                        return m;
                    }
                    return rep.transposition(aa, bb, d) * ctx.c;
                };
                QMat rhs = comm(a, b) - comm(a, n);
                CHECK(lhs == rhs);
            }
        // braid relation s_1 s_2 s_1 = s_2 s_1 s_2
        QMat s1 = rep.adjacent_transposition(1, d), s2 = rep.adjacent_transposition(2, d);
        CHECK(s1 * s2 * s1 == s2 * s1 * s2);
        CHECK(s1 * s1 == QMat::identity(rep.dim(d)));
        // Dunkl operators commute
        QMat d12 = rep.dunkl(1, d + 1), d22 = rep.dunkl(2, d + 1);
        CHECK(rep.dunkl(1, d) * d22 == rep.dunkl(2, d) * d12);
    }
}

TEST_CASE("fourier reverses the grading") {
    for (auto [m, n] : {std::pair{3, 2}, std::pair{4, 3}}) {
        FiniteRep rep = FiniteRep::build(m, n);
        for (int d = 0; d <= rep.top_degree(); ++d) {
            QMat phi = rep.fourier(d);
            CHECK(phi.rows() == (size_t)rep.dim(rep.top_degree() - d));
            CHECK(rank(phi) == (size_t)rep.dim(d));  // isomorphism onto the mirror degree
        }
        // Phi s = s Phi (commutes with S_n)
        for (int d = 0; d <= rep.top_degree(); ++d)
            for (int a = 1; a < n; ++a)
                CHECK(rep.adjacent_transposition(a, rep.top_degree() - d) * rep.fourier(d) ==
                      rep.fourier(d) * rep.adjacent_transposition(a, d));
    }
}

TEST_CASE("hom exterior basis") {
    FiniteRep rep = FiniteRep::build(4, 3);
    // dimensions match hook isotypic multiplicities
    for (int k = 0; k <= 2; ++k) {
        Partition hook = hook_partition(3, k);
        long total = 0;
        for (int d = 0; d <= rep.top_degree(); ++d) {
            auto basis = hom_exterior_basis(rep, k, d);
            CHECK((long)basis.size() == rep.isotypic_mult(hook, d));
            total += basis.size();
        }
        if (k == 0) CHECK(total == 5);
        if (k == 1) CHECK(total == 5);  // middle row of the L_{4/3} picture
        if (k == 2) CHECK(total == 1);
    }
}

TEST_CASE("json round trip") {
    FiniteRep rep = FiniteRep::build(4, 3);
    std::string js = rep.to_json();
    FiniteRep back = FiniteRep::from_json(js);
    CHECK(back.to_json() == js);
    CHECK(back.total_dim() == rep.total_dim());
    for (int d = 0; d <= rep.top_degree(); ++d) {
        CHECK(back.gram(d) == rep.gram(d));
        CHECK(back.coset_monomials(d) == rep.coset_monomials(d));
    }
}
