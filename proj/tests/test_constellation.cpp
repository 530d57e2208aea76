#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <altmap/constellation.hpp>

using namespace altmap;

namespace {

// Univariate fixed point V = t + (m-1) V^{m-1}, the d = 1, x_1 = 1 case,
// solved independently of the multivariate machinery.
Series eulerian_V(int m, int t_order)
{
    Series t = Series::variable({"t"}, {t_order}, "t");
    Series V = t;
    for (int i = 0; i <= t_order + 2; ++i)
        V = t + Rational(m - 1) * V.pow(m - 1);
    return V;
}

Series poly_in_V(int m, const std::vector<std::pair<Rational, int>>& terms)
{
    Series r({"V"}, {kUnbounded});
    for (const auto& [c, e] : terms)
        r = r + Series::monomial({"V"}, {kUnbounded}, Exp{e}, c);
    (void)m;
    return r;
}

// Substitute alpha_1 = V^{m-1} (the d = 1, x_1 = 1 case) to get a pure
// polynomial in V.
Series specialize_d1(const Series& p, int m)
{
    Series V = Series::variable({"V"}, {kUnbounded}, "V");
    return compose(p, {{"V", V}, {"a1", V.pow(m - 1)}});
}

} // namespace

TEST_CASE("solve_V: no white faces leaves the bare vertex weight")
{
    ConstellationParams cp{3, 2};
    Series V = solve_V(cp, 6, 0);
    CHECK(V == Series::variable(constellation_vars(2), {6, 0, 0}, "t"));
}

TEST_CASE("solve_V: frozen values and defining equation, m=3, d=1")
{
    ConstellationParams cp{3, 1};
    Series V = solve_V(cp, 12, 6);
    long want[] = {1, 2, 8, 40, 224, 1344};
    for (int n = 0; n <= 5; ++n) CHECK(V.coeff(Exp{n + 1, n}) == want[n]);
    Series t = Series::variable(V.vars(), V.trunc(), "t");
    Series x1 = Series::variable(V.vars(), V.trunc(), "x1");
    CHECK(V == t + Rational(2) * x1 * V.pow(2)); // binom(2,1) = 2
}

TEST_CASE("V_power_coeffs matches the univariate fixed point")
{
    for (int m : {3, 4, 5}) {
        Series V = eulerian_V(m, 14);
        for (int k = 1; k <= 3; ++k)
            CHECK(V_power_coeffs(m, k, 14).window_equal(V.pow(k)));
    }
    CHECK_THROWS_AS(V_power_coeffs(2, 1, 5), std::invalid_argument);
}

TEST_CASE("vertex-series coefficients: cyclic-lemma formula and rooted counts")
{
    for (int m : {2, 3}) {
        ConstellationParams cp{m, 2};
        Series V = solve_V(cp, 14, 3);
        for (long n1 = 0; n1 <= 3; ++n1)
            for (long n2 = 0; n2 <= 2; ++n2) {
                if (n1 + n2 == 0) continue;
                std::vector<long> prof{n1, n2};
                long v = profile_vertices(m, prof);
                if (v - 1 > 14) continue;
                Rational lag = lagV_coeff(m, prof);
                CHECK(V.coeff(Exp{static_cast<int>(v - 1), static_cast<int>(n1),
                                  static_cast<int>(n2)}) == lag);
                // lagV = (m-1)/m * v * rooted_count
                CHECK(lag == frac(m - 1, m) * Rational(v) * rooted_count(m, prof));
            }
    }
}

TEST_CASE("rooted_count: the unique one-edge bipartite map")
{
    CHECK(rooted_count(2, {1}) == 1);
    CHECK_THROWS_AS(rooted_count(2, {0, 0}), std::invalid_argument);
}

TEST_CASE("compute_alphas: forced identity t = V - (m-1) alpha_1")
{
    for (int m : {2, 3, 4}) {
        ConstellationParams cp{m, 2};
        Series V = solve_V(cp, 10, 3);
        auto alpha = compute_alphas(cp, V);
        Series t = Series::variable(V.vars(), V.trunc(), "t");
        CHECK(t == V - Rational(m - 1) * alpha[0]);
    }
    ConstellationParams cp{3, 1};
    Series V = solve_V(cp, 8, 3);
    Series x1 = Series::variable(V.vars(), V.trunc(), "x1");
    CHECK(compute_alphas(cp, V)[0] == x1 * V.pow(2));
}

TEST_CASE("alternating_A: A_0 and the closed form for A_1")
{
    for (int m : {2, 3, 4, 5}) {
        ConstellationParams cp{m, 2};
        auto A = alternating_A(cp, 2);
        Series V = Series::variable(A[0].vars(), A[0].trunc(), "V");
        Series a1 = Series::variable(A[0].vars(), A[0].trunc(), "a1");
        Series a2 = Series::variable(A[0].vars(), A[0].trunc(), "a2");
        CHECK(A[0] == V - Rational(m - 1) * a1);
        Series want = V * V - Rational(2 * m - 3) * V * a1 +
                      frac(m - 1, 2) * (Rational(m - 2) * a1 * a1 - Rational(2) * a2);
        CHECK(A[1] == want);
    }
}

TEST_CASE("alternating_A: A_r involves only alpha_1..alpha_{r+1}")
{
    ConstellationParams cp{3, 4};
    auto A = alternating_A(cp, 2);
    CHECK(A[1].max_degree("a3") <= 0);
    CHECK(A[1].max_degree("a4") <= 0);
    CHECK(A[2].max_degree("a4") <= 0);
    CHECK(A[2].max_degree("a3") == 1); // and alpha_{r+1} does appear
}

TEST_CASE("alternating_A: pure-V polynomials in the d=1, x_1=1 case")
{
    // With alpha_1 = V^{m-1}:
    //   A_1 = V^2 - (2m-3)V^m + (m-1)(m-2)/2 V^{2m-2}
    //   A_2 = 2V^3 - (6m-10)V^{m+1} + (m-2)(4m-5)V^{2m-1}
    //         - (m-1)(m-2)(2m-3)/3 V^{3m-3}
    for (int m : {2, 3, 4, 5}) {
        ConstellationParams cp{m, 1};
        auto A = alternating_A(cp, 2);
        Series A1 = specialize_d1(A[1], m);
        Series A2 = specialize_d1(A[2], m);
        Series w1 = poly_in_V(m, {{1, 2},
                                  {-Rational(2 * m - 3), m},
                                  {frac((m - 1) * (m - 2), 2), 2 * m - 2}});
        Series w2 = poly_in_V(
            m, {{2, 3},
                {-Rational(6 * m - 10), m + 1},
                {Rational((m - 2) * (4 * m - 5)), 2 * m - 1},
                {-frac((m - 1) * (m - 2) * (2 * m - 3), 3), 3 * m - 3}});
        CHECK(A1 == w1);
        CHECK(A2 == w2);
    }
}

TEST_CASE("rooted-constellation series: integral route equals A_1 - t^2")
{
    for (int m : {2, 3}) {
        ConstellationParams cp{m, 2};
        Series V = solve_V(cp, 9, 3);
        auto alpha = compute_alphas(cp, V);
        Series A1 = eval_at_valpha(alternating_A(cp, 1)[1], V, alpha);
        Series t = Series::variable(V.vars(), V.trunc(), "t");
        CHECK((A1 - t * t).window_equal(rooted_C(cp, V)));
    }
}

TEST_CASE("integral identity m int(V d alpha_1) = (m-1)(V alpha_1 + alpha_2)")
{
    for (int m : {2, 3, 4}) {
        ConstellationParams cp{m, 2};
        Series V = solve_V(cp, 9, 3);
        auto alpha = compute_alphas(cp, V);
        Series lhs = Rational(m) * (V * alpha[0].derive("t")).integrate("t");
        Series rhs = Rational(m - 1) * (V * alpha[0] + alpha[1]);
        CHECK(lhs.window_equal(rhs));
    }
}

TEST_CASE("monochrom_F_white: boundary of length zero is the vertex map")
{
    ConstellationParams cp{3, 2};
    Series V = solve_V(cp, 8, 3);
    Series t = Series::variable(V.vars(), V.trunc(), "t");
    CHECK(monochrom_F_white(cp, 0, V) == t);
}

TEST_CASE("monochrom_F_white: derivative relation")
{
    for (int m : {2, 3}) {
        ConstellationParams cp{m, 2};
        Series V = solve_V(cp, 9, 3);
        for (int p = 1; p <= 2; ++p) {
            Series F = monochrom_F_white(cp, p, V);
            Series want = Rational(binomial(static_cast<long>(m) * p, p)) *
                          V.pow((m - 1) * p);
            CHECK(F.derive("t").window_equal(want));
        }
    }
}

TEST_CASE("monochrom_F_white agrees with the spectral white-boundary route")
{
    ConstellationParams cp{3, 1};
    int pad = 4; // the white extraction narrows the t-window
    HypermapWeights w = constellation_weights(cp, 8 + pad, 3);
    auto sd = solve_spectral(w);
    auto Wt = monochromatic_W(w, sd, BoundaryColor::white, 2 * cp.m);
    Series V = solve_V(cp, 8 + pad, 3);
    for (int p = 0; p <= 2; ++p) {
        Series F = monochrom_F_white(cp, p, V);
        CHECK(Wt[cp.m * p].window_equal(F));
        if (p > 0) CHECK(!Wt[cp.m * p].is_zero());
    }
}

TEST_CASE("kernel identities hold on the spectral curve")
{
    for (int m : {2, 3}) {
        ConstellationParams cp{m, 1};
        auto rep = kernel_identities_check(cp, 8, 4, 2 * m + 2);
        CHECK(rep.ok());
        CHECK(rep.depth >= 2 * m + 2);
    }
}
