#include <altmap/peeling.hpp>

#include <algorithm>
#include <stdexcept>

namespace altmap {

namespace {

// One full table fill at a fixed p-cutoff. Entries beyond the cutoff are
// treated as zero; the caller certifies the low-p entries by stabilization.
std::vector<std::vector<Series>> fill_table(const HypermapWeights& w,
                                            const std::vector<Series>& W,
                                            int r_max, int p_max)
{
    std::vector<std::vector<Series>> rows(
        r_max + 1, std::vector<Series>(p_max + 1, w.ring_zero));
    for (int p = 0; p <= p_max; ++p) rows[0][p] = W[p];
    for (int r = 1; r <= r_max; ++r)
        for (int p = 0; p <= p_max; ++p) {
            Series M = w.ring_zero;
            for (const auto& [i, ti] : w.black)
                if (p + i <= p_max) M = M + ti * rows[r - 1][p + i];
            for (int pp = 0; pp <= p; ++pp)
                M = M + rows[0][pp] * rows[r - 1][p - pp];
            for (int rp = 0; rp <= r - 2; ++rp)
                M = M + rows[rp][0] * rows[r - rp - 1][p];
            rows[r][p] = M;
        }
    return rows;
}

bool agree_through(const std::vector<std::vector<Series>>& a,
                   const std::vector<std::vector<Series>>& b, int p_through)
{
    for (std::size_t r = 0; r < a.size(); ++r)
        for (int p = 0; p <= p_through; ++p)
            if (a[r][p] != b[r][p]) return false;
    return true;
}

} // namespace

MixedBoundaryTable peel_recursion(const HypermapWeights& w, int r_max,
                                  int p_report)
{
    if (r_max < 0 || p_report < 0)
        throw std::invalid_argument("peel_recursion: negative range");
    HypermapSpectralData sd = solve_spectral(w);

    int t_order = w.ring_zero.trunc()[w.ring_zero.var_index("t")];
    int deg = std::max(w.black_degree(), w.white_degree());
    int p_max = std::max(p_report + w.black_degree(), t_order * deg);

    std::vector<Series> W = monochromatic_W(w, sd, BoundaryColor::black, p_max);
    auto cur = fill_table(w, W, r_max, p_max);
    for (int attempt = 0; attempt < 6; ++attempt) {
        int p_next = 2 * p_max;
        std::vector<Series> W2 =
            monochromatic_W(w, sd, BoundaryColor::black, p_next);
        auto nxt = fill_table(w, W2, r_max, p_next);
        if (agree_through(cur, nxt, p_report + w.black_degree())) {
            MixedBoundaryTable tbl;
            tbl.rows = std::move(cur);
            tbl.r_max = r_max;
            tbl.p_certified = p_report;
            tbl.p_stored = p_max;
            return tbl;
        }
        cur = std::move(nxt);
        p_max = p_next;
    }
    throw std::runtime_error("peel_recursion: p-cutoff did not stabilize");
}

PeelResidualReport functional_equation_residual(const HypermapWeights& w,
                                                const MixedBoundaryTable& tbl)
{
    // Extend the weight ring with the alternating-length marker w.
    std::vector<std::string> vars = w.ring_zero.vars();
    std::vector<int> trunc = w.ring_zero.trunc();
    vars.push_back("w");
    trunc.push_back(tbl.r_max);
    Series zero = embed(w.ring_zero, vars, trunc);
    Series wvar = Series::variable(vars, trunc, "w");
    Series one = Series::constant(vars, trunc, 1);

    int p_top = tbl.p_certified;
    // Series in zeta = x^{-1}; boundary length p sits at zeta^{p+1}.
    LSeries Wx(zero, 1, p_top + 1); // W(x)
    LSeries M(zero, 1, p_top + 1);  // M(x,w), rows r >= 1 only
    Series Aw = zero;               // A(w), rows at p = 0
    for (int p = 0; p <= p_top; ++p)
        Wx.add_term(p + 1, embed(tbl.at(p, 0), vars, trunc));
    for (int r = 1; r <= tbl.r_max; ++r)
        for (int p = 0; p <= p_top; ++p)
            M.add_term(p + 1, embed(tbl.at(p, r), vars, trunc) * wvar.pow(r));
    for (int r = 0; r <= tbl.r_max; ++r)
        Aw = Aw + embed(tbl.A(r), vars, trunc) * wvar.pow(r + 1);

    LSeries Y = Wx; // Y(x) = sum t_i x^{i-1} + W(x)
    for (const auto& [i, ti] : w.black)
        Y.add_term(1 - i, embed(ti, vars, trunc));

    LSeries K = LSeries::term(one - Aw, 0) - wvar * Y.shifted(-1);
    LSeries MW = M + Wx;
    LSeries R = wvar * (Wx.shifted(-1) * Y);
    for (const auto& [i, ti] : w.black) {
        // [x^i (M + W)]_{x >= 0}: nonpositive zeta powers of the shift.
        LSeries part(zero, MW.low() - i, kUnbounded);
        LSeries shifted = MW.shifted(-i);
        for (const auto& [k, c] : shifted.terms())
            if (k <= 0) part.add_term(k, c);
        R = R - wvar * (embed(ti, vars, trunc) * part);
    }

    LSeries res = K * M - R;
    PeelResidualReport rep;
    rep.depth = res.top();
    rep.ok = res.is_zero_through(rep.depth);
    return rep;
}

} // namespace altmap
