#include <altmap/constellation.hpp>

#include <algorithm>
#include <stdexcept>

namespace altmap {

namespace {

void check_params(const ConstellationParams& cp)
{
    if (cp.m < 2 || cp.d < 1)
        throw std::invalid_argument("constellation: need m >= 2 and d >= 1");
}

std::string xvar(int i) { return "x" + std::to_string(i); }
std::string avar(int k) { return "a" + std::to_string(k); }

} // namespace

std::vector<std::string> constellation_vars(int d)
{
    std::vector<std::string> vs{"t"};
    for (int i = 1; i <= d; ++i) vs.push_back(xvar(i));
    return vs;
}

Series solve_V(const ConstellationParams& cp, int t_order, int x_order)
{
    check_params(cp);
    auto vars = constellation_vars(cp.d);
    std::vector<int> trunc(vars.size(), x_order);
    trunc[0] = t_order;
    Series t = Series::variable(vars, trunc, "t");

    Series V = t;
    long budget = 2L * (t_order + static_cast<long>(cp.d) * x_order) + 30;
    for (long sweep = 0; sweep < budget; ++sweep) {
        Series next = t;
        for (int i = 1; i <= cp.d; ++i) {
            Rational c(binomial(static_cast<long>(cp.m) * i - 1, i));
            next = next + c * Series::variable(vars, trunc, xvar(i)) *
                              V.pow((cp.m - 1) * i);
        }
        if (next == V) return V;
        V = std::move(next);
    }
    throw std::runtime_error("solve_V: fixed point did not settle");
}

std::vector<Series> compute_alphas(const ConstellationParams& cp, const Series& V)
{
    check_params(cp);
    std::vector<Series> alpha;
    alpha.reserve(cp.d);
    for (int k = 1; k <= cp.d; ++k) {
        Series ak(V.vars(), V.trunc());
        for (int i = k; i <= cp.d; ++i) {
            Rational c(binomial(static_cast<long>(cp.m) * i - 1, i - k));
            ak = ak + c * Series::variable(V.vars(), V.trunc(), xvar(i)) *
                          V.pow((cp.m - 1) * i + k - 1);
        }
        alpha.push_back(ak);
    }
    return alpha;
}

std::vector<Series> alternating_A(const ConstellationParams& cp, int r_max)
{
    check_params(cp);
    std::vector<std::string> vars{"s", "V"};
    for (int k = 1; k <= cp.d; ++k) vars.push_back(avar(k));
    std::vector<int> trunc(vars.size(), kUnbounded);
    trunc[0] = r_max + 1;

    Series s = Series::variable(vars, trunc, "s");
    Series one = Series::constant(vars, trunc, 1);
    Series P = one; // 1 + sum alpha_k s^k
    for (int k = 1; k <= cp.d; ++k)
        P = P + Series::variable(vars, trunc, avar(k)) * s.pow(k);
    Series Qinv = (one + Series::variable(vars, trunc, "V") * s).inverse();

    Series w = s * P.pow(cp.m - 2) * Qinv * Qinv;
    Series Aw = one - P.pow(cp.m - 1) * Qinv;

    std::map<std::string, Series> sub;
    sub.emplace("s", revert(w, "s"));
    for (std::size_t i = 1; i < vars.size(); ++i)
        sub.emplace(vars[i], Series::variable(vars, trunc, vars[i]));
    Series A = compose(Aw, sub); // = sum_r A_r s^{r+1}, s now standing for w

    // Strip the s variable to return plain polynomials in (V, alpha).
    std::vector<std::string> pvars(vars.begin() + 1, vars.end());
    std::vector<int> ptrunc(pvars.size(), kUnbounded);
    std::vector<Series> out(r_max + 1, Series(pvars, ptrunc));
    for (const auto& [e, c] : A.terms()) {
        int r = e[0] - 1;
        if (r < 0 || r > r_max)
            throw std::logic_error("alternating_A: stray power of the marker");
        Exp pe(e.begin() + 1, e.end());
        out[r] = out[r] + Series::monomial(pvars, ptrunc, pe, c);
    }
    return out;
}

Series eval_at_valpha(const Series& p, const Series& V,
                      const std::vector<Series>& alpha)
{
    std::map<std::string, Series> sub;
    sub.emplace("V", V);
    for (std::size_t k = 0; k < alpha.size(); ++k)
        sub.emplace(avar(static_cast<int>(k) + 1), alpha[k]);
    return compose(p, sub);
}

Series V_power_coeffs(int m, int k, int t_order)
{
    if (m < 3) throw std::invalid_argument("V_power_coeffs: needs m >= 3");
    if (k < 1) throw std::invalid_argument("V_power_coeffs: needs k >= 1");
    Series r({"t"}, {t_order});
    for (long n = 0;; ++n) {
        long e = (m - 2) * n + k;
        if (e > t_order) break;
        Rational c = frac(Int(k) * int_pow(m - 1, n) *
                              binomial(static_cast<long>(m - 1) * n + k - 1, n),
                          e);
        r = r + Series::monomial({"t"}, {t_order}, Exp{static_cast<int>(e)}, c);
    }
    return r;
}

long profile_vertices(int m, const std::vector<long>& profile)
{
    long v = 2;
    for (std::size_t i = 0; i < profile.size(); ++i)
        v += (static_cast<long>(m - 1) * (i + 1) - 1) * profile[i];
    return v;
}

Rational rooted_count(int m, const std::vector<long>& profile)
{
    long nsum = 0;
    for (long n : profile) {
        if (n < 0) throw std::invalid_argument("rooted_count: negative profile");
        nsum += n;
    }
    if (nsum == 0) throw std::invalid_argument("rooted_count: empty profile");
    long v = profile_vertices(m, profile);
    Rational r = frac(m, m - 1);
    r *= frac(factorial(v + nsum - 2), factorial(v));
    for (std::size_t i = 0; i < profile.size(); ++i) {
        long n = profile[i];
        if (n == 0) continue;
        long mi = static_cast<long>(m) * (i + 1);
        r *= frac(int_pow(binomial(mi - 1, i + 1), n), factorial(n));
    }
    return r;
}

Rational lagV_coeff(int m, const std::vector<long>& profile)
{
    long nsum = 0;
    for (long n : profile) nsum += n;
    long v = profile_vertices(m, profile);
    Rational r = frac(factorial(v + nsum - 2), factorial(v - 1));
    for (std::size_t i = 0; i < profile.size(); ++i) {
        long n = profile[i];
        if (n == 0) continue;
        long mi = static_cast<long>(m) * (i + 1);
        r *= frac(int_pow(binomial(mi - 1, i + 1), n), factorial(n));
    }
    return r;
}

Series rooted_C(const ConstellationParams& cp, const Series& V)
{
    Series t = Series::variable(V.vars(), V.trunc(), "t");
    return frac(cp.m, cp.m - 1) * (V - t).integrate("t");
}

Series monochrom_F_white(const ConstellationParams& cp, int p, const Series& V)
{
    check_params(cp);
    if (p < 0) throw std::invalid_argument("monochrom_F_white: p >= 0");
    Series r = frac(1, static_cast<long>(cp.m - 1) * p + 1) *
               V.pow((cp.m - 1) * p + 1);
    for (int i = 1; i <= cp.d; ++i) {
        Rational c = frac(i, p + i) * Rational(binomial(static_cast<long>(cp.m) * i - 1, i));
        r = r - c * Series::variable(V.vars(), V.trunc(), xvar(i)) *
                    V.pow((cp.m - 1) * (p + i));
    }
    return Rational(binomial(static_cast<long>(cp.m) * p, p)) * r;
}

HypermapWeights constellation_weights(const ConstellationParams& cp, int t_order,
                                      int x_order)
{
    check_params(cp);
    auto vars = constellation_vars(cp.d);
    std::vector<int> trunc(vars.size(), x_order);
    trunc[0] = t_order;
    HypermapWeights w;
    w.ring_zero = Series(vars, trunc);
    w.black.emplace(cp.m, Series::constant(vars, trunc, 1));
    for (int i = 1; i <= cp.d; ++i)
        w.white.emplace(cp.m * i, Series::variable(vars, trunc, xvar(i)));
    return w;
}

KernelReport kernel_identities_check(const ConstellationParams& cp, int t_order,
                                     int x_order, int depth)
{
    check_params(cp);
    int m = cp.m;
    // Window erosion in the Laurent products costs up to 2m orders; expand
    // deeper so the certified depth meets the request.
    int idepth = depth + 2 * m;
    HypermapWeights w = constellation_weights(cp, t_order, x_order);
    HypermapSpectralData sd = solve_spectral(w);
    LSeries Y = expand_black(w, sd, idepth).Y; // series in zeta = x^{-1}
    LSeries Yinv = Y.inverse(idepth + 2 * (m - 1) + 2);
    LSeries omega = Yinv.pow(2).shifted(-(m - 2)); // x^{m-2}/Y^2, starts at zeta^m

    Series V = solve_V(cp, t_order, x_order);
    std::vector<Series> alpha = compute_alphas(cp, V);
    int r_max = idepth / m;
    std::vector<Series> Apoly = alternating_A(cp, r_max);

    LSeries Aw(w.ring_zero, 0, idepth);
    for (int r = 0; r <= r_max; ++r)
        Aw = Aw + eval_at_valpha(Apoly[r], V, alpha) * omega.pow(r + 1);

    Series one = Series::constant(w.ring_zero.vars(), w.ring_zero.trunc(), 1);
    LSeries Ares = Aw - (LSeries::term(one, 0) - Yinv.shifted(-(m - 1)));
    LSeries K = LSeries::term(one, 0) - Aw - omega * Y.shifted(-1);
    LSeries R = omega * (Y * Y).shifted(-1) - omega * Y.shifted(-m) -
                Aw.shifted(-(m - 1));

    KernelReport rep;
    rep.depth = std::min({Ares.top(), K.top(), R.top()});
    rep.A_ok = Ares.is_zero_through(rep.depth);
    rep.K_ok = K.is_zero_through(rep.depth);
    rep.R_ok = R.is_zero_through(rep.depth);
    return rep;
}

} // namespace altmap
