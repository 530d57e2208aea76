#include <altmap/spectral.hpp>

#include <stdexcept>

namespace altmap {

namespace {

Series one_like(const Series& z)
{
    return Series::constant(z.vars(), z.trunc(), 1);
}

// Iteration budget for the graded fixed point: with a contracting grading
// every sweep settles at least one more grade, and the window only holds
// finitely many.
long sweep_budget(const Series& z)
{
    long b = 0;
    for (int t : z.trunc())
        if (t != kUnbounded) b += t + 1;
    return 2 * b + 30;
}

LSeries x_curve(const Series& zero, const std::vector<Series>& a)
{
    LSeries x = LSeries::term(one_like(zero), 1);
    for (std::size_t k = 0; k < a.size(); ++k) x.add_term(-static_cast<int>(k), a[k]);
    return x;
}

LSeries y_curve(const Series& zero, const Series& V, const std::vector<Series>& b)
{
    LSeries y(zero, -1, kUnbounded);
    y.add_term(-1, V);
    for (std::size_t k = 0; k < b.size(); ++k) y.add_term(static_cast<int>(k), b[k]);
    return y;
}

LSeries weight_sum(const std::map<int, Series>& faces, const LSeries& curve)
{
    LSeries s(curve.ring(), 0, kUnbounded);
    for (const auto& [deg, wt] : faces) s = s + wt * curve.pow(deg - 1);
    return s;
}

void check_degrees(const std::map<int, Series>& faces)
{
    for (const auto& [deg, wt] : faces) {
        (void)wt;
        if (deg < 2) throw std::invalid_argument("spectral: face degree must be >= 2");
    }
}

bool same_terms(const LSeries& a, const LSeries& b)
{
    return a.terms() == b.terms();
}

// Reinterpret a finitely-supported iterate as an exact Laurent polynomial.
// Sound only inside a Picard iteration whose next sweep discards everything
// the truncation cut off.
LSeries as_exact(const LSeries& s)
{
    LSeries r(s.ring(), s.min_power(), kUnbounded);
    for (const auto& [p, c] : s.terms()) r.add_term(p, c);
    return r;
}

LSeries stamped(const LSeries& s, int top)
{
    LSeries r(s.ring(), s.min_power(), top);
    for (const auto& [p, c] : s.terms())
        if (p <= top) r.add_term(p, c);
    return r;
}

} // namespace

HypermapSpectralData solve_spectral(const HypermapWeights& w)
{
    check_degrees(w.black);
    check_degrees(w.white);
    const Series& zero = w.ring_zero;
    if (!zero.is_zero())
        throw std::invalid_argument("solve_spectral: ring prototype must be zero");
    Series t = Series::variable(zero.vars(), zero.trunc(), "t");

    int nb = w.black.empty() ? 0 : w.black_degree();
    int na = w.white.empty() ? 0 : w.white_degree();

    HypermapSpectralData d;
    d.V = t;
    d.a.assign(na, zero);
    d.b.assign(nb, zero);

    long budget = sweep_budget(zero);
    for (long sweep = 0; sweep < budget; ++sweep) {
        LSeries sb = weight_sum(w.black, x_curve(zero, d.a));
        std::vector<Series> b_new(nb, zero);
        for (int k = 0; k < nb; ++k) b_new[k] = sb.coeff_raw(k);
        Series v_new = t + sb.coeff_raw(-1);

        LSeries sw = weight_sum(w.white, y_curve(zero, v_new, b_new));
        std::vector<Series> a_new(na, zero);
        for (int k = 0; k < na; ++k) a_new[k] = sw.coeff_raw(-k);

        bool settled = v_new == d.V && a_new == d.a && b_new == d.b;
        d.V = std::move(v_new);
        d.a = std::move(a_new);
        d.b = std::move(b_new);
        if (settled) return d;
    }
    throw std::runtime_error(
        "solve_spectral: fixed point did not settle (weights not contracting "
        "in the grading; attach a marker variable to numeric weights)");
}

bool conditions_hold(const HypermapWeights& w, const HypermapSpectralData& d)
{
    const Series& zero = w.ring_zero;
    Series t = Series::variable(zero.vars(), zero.trunc(), "t");
    LSeries x = x_curve(zero, d.a);
    LSeries y = y_curve(zero, d.V, d.b);

    LSeries r1 = d.V * (y - weight_sum(w.black, x)) - LSeries::term(d.V * t, -1);
    for (const auto& [p, c] : r1.terms())
        if (p >= -1 && !c.is_zero()) return false;

    LSeries r2 = d.V * (x - weight_sum(w.white, y)) - LSeries::term(t, 1);
    for (const auto& [p, c] : r2.terms())
        if (p <= 1 && !c.is_zero()) return false;
    return true;
}

LSeries expand_y_of_x(const LSeries& xpoly, const LSeries& ypoly, int depth)
{
    if (xpoly.top() != kUnbounded || ypoly.top() != kUnbounded)
        throw std::invalid_argument("expand_y_of_x: curves must be exact polynomials");
    const Series& zero = xpoly.ring();
    Series one = one_like(zero);
    if (xpoly.coeff_raw(1) != one || xpoly.max_power() != 1)
        throw std::invalid_argument("expand_y_of_x: x(z) must be z + lower order");

    int hi = std::max(ypoly.max_power(), 0);
    int idepth = depth + hi + 1;

    // Tail T(z) = x(z) - z; solve z(x) from z = 1/zeta - T(z) by Picard
    // iteration in zeta = x^{-1} (each sweep settles at least one more order).
    LSeries tail = xpoly - LSeries::term(one, 1);
    LSeries z = LSeries::term(one, -1, idepth);
    bool settled = false;
    for (int sweep = 0; sweep < idepth + 8 && !settled; ++sweep) {
        LSeries z_new = LSeries::term(one, -1, idepth);
        if (!tail.is_zero())
            z_new = z_new - eval_laurent_poly(tail, as_exact(z), idepth);
        settled = same_terms(z_new, z);
        z = std::move(z_new);
    }
    if (!settled) throw std::runtime_error("expand_y_of_x: inversion did not settle");

    return eval_laurent_poly(ypoly, stamped(z, idepth), depth);
}

LSeries expand_x_of_y(const LSeries& xpoly, const LSeries& ypoly, const Series& V,
                      int depth)
{
    if (xpoly.top() != kUnbounded || ypoly.top() != kUnbounded)
        throw std::invalid_argument("expand_x_of_y: curves must be exact polynomials");
    const Series& zero = xpoly.ring();
    Series one = one_like(zero);
    if (ypoly.coeff_raw(-1) != V || ypoly.min_power() != -1)
        throw std::invalid_argument("expand_x_of_y: y(z) must be V/z + higher order");

    // Substitute z = V u. The white curve becomes 1/u + B(u) with
    // B(u) = sum b_k V^k u^k, and V scales out of the leading pole.
    LSeries B(zero, 0, kUnbounded);
    for (const auto& [p, c] : ypoly.terms())
        if (p >= 0) B.add_term(p, c * V.pow(static_cast<unsigned>(p)));

    // x(V u): positive powers pick up V^p; a z^{-k} term needs a_k / V^k,
    // which exists in the ring because a_k is divisible by t^k and V = t U
    // with U a unit.
    Series U = V.divided_by_power("t", 1);
    Series Uinv = U.inverse();
    LSeries xs(zero, xpoly.min_power(), kUnbounded);
    for (const auto& [p, c] : xpoly.terms()) {
        if (p >= 0)
            xs.add_term(p, c * V.pow(static_cast<unsigned>(p)));
        else
            xs.add_term(p, c.divided_by_power("t", -p) * Uinv.pow(static_cast<unsigned>(-p)));
    }

    int iu = depth + 3;
    // Solve 1/u + B(u) = 1/eta for u(eta): u = eta * (1 - eta B(u))^{-1}.
    LSeries u = LSeries::term(one, 1, iu);
    bool settled = false;
    for (int sweep = 0; sweep < iu + 8 && !settled; ++sweep) {
        LSeries bu = B.is_zero() ? LSeries(zero, 0, kUnbounded)
                                 : eval_laurent_poly(B, as_exact(u), iu);
        LSeries den = LSeries::term(one, 0) - as_exact(bu).shifted(1);
        LSeries u_new = den.inverse(iu).shifted(1).truncated(iu + 1);
        settled = same_terms(u_new, u);
        u = std::move(u_new);
    }
    if (!settled) throw std::runtime_error("expand_x_of_y: inversion did not settle");

    return eval_laurent_poly(xs, stamped(u, iu), depth);
}

BlackExpansion expand_black(const HypermapWeights& w, const HypermapSpectralData& d,
                            int depth)
{
    const Series& zero = w.ring_zero;
    LSeries x = x_curve(zero, d.a);
    LSeries y = y_curve(zero, d.V, d.b);
    BlackExpansion e{expand_y_of_x(x, y, depth), LSeries(zero, 0, depth)};
    LSeries wt(zero, 0, kUnbounded);
    for (const auto& [deg, c] : w.black) wt.add_term(-(deg - 1), c);
    e.W = e.Y - wt;
    return e;
}

WhiteExpansion expand_white(const HypermapWeights& w, const HypermapSpectralData& d,
                            int depth)
{
    const Series& zero = w.ring_zero;
    LSeries x = x_curve(zero, d.a);
    LSeries y = y_curve(zero, d.V, d.b);
    WhiteExpansion e{expand_x_of_y(x, y, d.V, depth), LSeries(zero, 0, depth)};
    LSeries wt(zero, 0, kUnbounded);
    for (const auto& [deg, c] : w.white) wt.add_term(-(deg - 1), c);
    e.Wt = e.X - wt;
    return e;
}

std::vector<Series> monochromatic_W(const HypermapWeights& w,
                                    const HypermapSpectralData& d,
                                    BoundaryColor color, int p_max)
{
    // The expansion can return a shallower reliable window than requested
    // (deep poles of the curve cost reliability); deepen until it suffices.
    int need = p_max + 1;
    int depth = need;
    LSeries tail = color == BoundaryColor::black ? expand_black(w, d, depth).W
                                                 : expand_white(w, d, depth).Wt;
    for (int tries = 0; tail.top() < need && tries < 8; ++tries) {
        depth += need - tail.top();
        tail = color == BoundaryColor::black ? expand_black(w, d, depth).W
                                             : expand_white(w, d, depth).Wt;
    }
    if (tail.top() < need)
        throw std::runtime_error("monochromatic_W: expansion window too shallow");
    std::vector<Series> out;
    out.reserve(p_max + 1);
    for (int p = 0; p <= p_max; ++p) out.push_back(tail.coeff(p + 1));
    if (color == BoundaryColor::white && d.a.size() > 1) {
        // The white extraction divides by powers of t up to the number of
        // a-coefficients minus one; narrow every window accordingly (some
        // cancellation paths would otherwise claim too much).
        int cut = static_cast<int>(d.a.size()) - 1;
        size_t ti = w.ring_zero.var_index("t");
        for (Series& s : out) {
            std::vector<int> tr = s.trunc();
            if (tr[ti] != kUnbounded)
                tr[ti] = std::min(tr[ti],
                                  std::max(0, w.ring_zero.trunc()[ti] - cut));
            s = s.with_trunc(tr);
        }
    }
    return out;
}

} // namespace altmap
