#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <altmap/constellation.hpp>
#include <altmap/peeling.hpp>

using namespace altmap;

namespace {

// Degree-3 faces of both colors, unit weights; safe without a face marker
// because every face carries at least one extra vertex.
HypermapWeights threevalent_weights(int t_order)
{
    HypermapWeights w;
    w.ring_zero = Series({"t"}, {t_order});
    Series one = Series::constant({"t"}, {t_order}, 1);
    w.black.emplace(3, one);
    w.white.emplace(3, one);
    return w;
}

Series univariate_V(int m, const Series& t)
{
    Series V = t;
    for (int i = 0; i <= t.trunc()[0] + 2; ++i)
        V = t + Rational(m - 1) * V.pow(m - 1);
    return V;
}

} // namespace

TEST_CASE("no inner faces: the alternating boundary counts plane trees")
{
    HypermapWeights w;
    w.ring_zero = Series({"t"}, {6});
    Series t = Series::variable({"t"}, {6}, "t");
    MixedBoundaryTable tbl = peel_recursion(w, 3, 4);
    CHECK(tbl.A(0) == t);
    CHECK(tbl.A(1) == t * t);
    CHECK(tbl.A(2) == Rational(2) * t.pow(3));
    CHECK(tbl.A(3) == Rational(5) * t.pow(4));
    for (int p = 1; p <= 4; ++p)
        for (int r = 0; r <= 3; ++r) CHECK(tbl.at(p, r).is_zero());

    auto rep = functional_equation_residual(w, tbl);
    CHECK(rep.ok);
}

TEST_CASE("bipartite weights: table column 0 matches the reversion route")
{
    ConstellationParams cp{2, 1};
    HypermapWeights w = constellation_weights(cp, 8, 8);
    MixedBoundaryTable tbl = peel_recursion(w, 3, 8);

    Series V = solve_V(cp, 8, 8);
    auto alpha = compute_alphas(cp, V);
    auto A = alternating_A(cp, 3);
    for (int r = 0; r <= 3; ++r)
        CHECK(tbl.A(r) == eval_at_valpha(A[r], V, alpha));

    // Boundaries of odd monochromatic length cannot close up.
    for (int p = 0; p <= tbl.p_certified; ++p)
        for (int r = 0; r <= 3; ++r)
            if (p % 2 != 0) CHECK(tbl.at(p, r).is_zero());
}

TEST_CASE("three-constellation weights: column 0 matches the reversion route")
{
    HypermapWeights w = threevalent_weights(8);
    MixedBoundaryTable tbl = peel_recursion(w, 3, 9);

    Series t = Series::variable({"t"}, {8}, "t");
    Series V = univariate_V(3, t);
    std::vector<Series> alpha{V.pow(2)};
    auto A = alternating_A(ConstellationParams{3, 1}, 3);
    for (int r = 0; r <= 3; ++r)
        CHECK(tbl.A(r) == eval_at_valpha(A[r], V, alpha));

    for (int p = 0; p <= tbl.p_certified; ++p)
        for (int r = 0; r <= 3; ++r)
            if (p % 3 != 0) CHECK(tbl.at(p, r).is_zero());
}

TEST_CASE("base row is the monochromatic table")
{
    HypermapWeights w = threevalent_weights(6);
    auto sd = solve_spectral(w);
    auto W = monochromatic_W(w, sd, BoundaryColor::black, 6);
    MixedBoundaryTable tbl = peel_recursion(w, 2, 6);
    for (int p = 0; p <= 6; ++p) CHECK(tbl.at(p, 0) == W[p]);
}

TEST_CASE("functional equation residual vanishes")
{
    {
        ConstellationParams cp{2, 1};
        HypermapWeights w = constellation_weights(cp, 8, 8);
        MixedBoundaryTable tbl = peel_recursion(w, 3, 10);
        auto rep = functional_equation_residual(w, tbl);
        CHECK(rep.ok);
        CHECK(rep.depth >= 8);
    }
    {
        HypermapWeights w = threevalent_weights(8);
        MixedBoundaryTable tbl = peel_recursion(w, 3, 10);
        auto rep = functional_equation_residual(w, tbl);
        CHECK(rep.ok);
        CHECK(rep.depth >= 8);
    }
}
