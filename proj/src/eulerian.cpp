#include <altmap/eulerian.hpp>

#include <altmap/constellation.hpp>

#include <gmpxx.h>

#include <stdexcept>

namespace altmap {

namespace {

Series rename_var(const Series& s, const std::string& from, const std::string& to)
{
    std::vector<std::string> vars = s.vars();
    vars[s.var_index(from)] = to;
    Series r(vars, s.trunc());
    for (const auto& [e, c] : s.terms()) r = r + Series::monomial(vars, s.trunc(), e, c);
    return r;
}

// Alternating series at m = 3, d = 1, x_1 = 1 as univariate polynomials in t:
// row r is A_r, reliable through t^(t_top).
std::vector<Series> eulerian_A_rows(int r_max, int t_top)
{
    Series t = Series::variable({"t"}, {t_top}, "t");
    Series V = t;
    for (int i = 0; i <= t_top + 2; ++i) V = t + Rational(2) * V.pow(2);
    auto A = alternating_A(ConstellationParams{3, 1}, r_max);
    std::vector<Series> rows;
    rows.reserve(r_max + 1);
    for (int r = 0; r <= r_max; ++r)
        rows.push_back(compose(A[r], {{"V", V}, {"a1", V.pow(2)}}));
    return rows;
}

} // namespace

Series compute_T(int t_order, int u_order)
{
    if (t_order < 1 || u_order < 0)
        throw std::invalid_argument("compute_T: bad truncation");
    // A_r has t-valuation r+1 (one vertex beyond n + r), so dividing by
    // t^(r+1) converts vertex counts into black-triangle counts.
    int t_top = t_order + u_order + 1;
    auto rows = eulerian_A_rows(u_order, t_top);
    std::vector<std::string> vars{"t", "u"};
    std::vector<int> trunc{t_order, u_order};
    Series T(vars, trunc);
    for (int r = 0; r <= u_order; ++r) {
        Series Tr = rows[r].divided_by_power("t", r + 1).with_trunc({t_order});
        for (const auto& [e, c] : Tr.terms())
            T = T + Series::monomial(vars, trunc, Exp{e[0], r}, c);
    }
    return T;
}

bool T_parametrization_check(int v_order, int w_order)
{
    std::vector<std::string> vars{"V", "W"};
    std::vector<int> trunc{v_order, w_order};
    Series one = Series::constant(vars, trunc, 1);
    Series V = Series::variable(vars, trunc, "V");
    Series W = Series::variable(vars, trunc, "W");

    Series t_img = V - Rational(2) * V * V;
    Series u_img = W * (one - Rational(2) * V) * (one + V * W) *
                   (one + W).inverse().pow(2);
    Series rhs = (one + W) * (one - Rational(2) * V - V * V * W) *
                 ((one - Rational(2) * V) * (one + V * W)).inverse();

    Series T = compute_T(v_order, w_order);
    Series lhs = compose(T, {{"t", t_img}, {"u", u_img}});
    return lhs.window_equal(rhs);
}

Series compute_B(int t_order, int z_order)
{
    std::vector<std::string> vars{"t", "z"};
    std::vector<int> trunc{t_order + 1, z_order};
    Series one = Series::constant(vars, trunc, 1);
    Series t = Series::variable(vars, trunc, "t");
    Series z = Series::variable(vars, trunc, "z");

    Series s8 = (one - Rational(8) * t).sqrt();
    Series inner = ((one + s8).pow(2) - Rational(4) * z) * (one - z).inverse();
    Series root = Rational(2) * (frac(1, 4) * inner).sqrt(); // constant term 4
    Series num = Rational(8) * t + Rational(8) * z +
                 (one - s8 - Rational(4) * z) * root;
    return (frac(1, 16) * num.divided_by_power("t", 1))
        .with_trunc({t_order, z_order});
}

Series compute_B_substitution(int t_order, int z_order)
{
    Series T = compute_T(t_order, z_order);
    Series u = Series::variable(T.vars(), T.trunc(), "u");
    // z = u T(t,u) = u + O(t u), invertible in u over the t-coefficients.
    Series B_of_u = compose(T, {{"t", Series::variable(T.vars(), T.trunc(), "t")},
                                {"u", revert(u * T, "u")}});
    return rename_var(B_of_u, "u", "z");
}

Series quartic_residual(const Series& B)
{
    const auto& vars = B.vars();
    const auto& trunc = B.trunc();
    Series one = Series::constant(vars, trunc, 1);
    Series t = Series::variable(vars, trunc, "t");
    Series z = Series::variable(vars, trunc, "z");
    Series zm1 = z - one;

    Series c4 = Rational(16) * t.pow(3) * zm1 * zm1;
    Series c3 = Rational(-32) * t * t * zm1 * zm1 * (t + z);
    Series c2 = t * zm1 *
                (Rational(24) * t * t * z + Rational(32) * t * z * z +
                 Rational(16) * z.pow(3) - Rational(16) * t * t -
                 Rational(52) * t * z - Rational(16) * z * z - z);
    Series c1 = Rational(-1) * z * zm1 *
                (Rational(8) * t * t - Rational(20) * t - one) * (t + z);
    Series c0 = z * z * (t + one).pow(3);
    return (((c4 * B + c3) * B + c2) * B + c1) * B + c0;
}

Series compute_Z(int z_order)
{
    std::vector<std::string> vars{"z"};
    std::vector<int> trunc{z_order};
    Series one = Series::constant(vars, trunc, 1);
    Series z = Series::variable(vars, trunc, "z");
    Series q = one - Rational(4) * z;
    Series half_power = q * q.sqrt() * (one - z).inverse().sqrt(); // (1-4z)^(3/2)(1-z)^(-1/2)
    return frac(1, 2) * (one + Rational(8) * z + half_power);
}

namespace {

constexpr int kFloatBits = 256;

// 80 decimal digits.
const char* kPiDigits =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164"
    "0628620899";

mpf_class to_mpf(const Rational& q)
{
    return mpf_class(mpq_class(q), kFloatBits);
}

mpf_class pow_ui(const mpf_class& base, unsigned long e)
{
    mpf_class r(1, kFloatBits);
    mpf_pow_ui(r.get_mpf_t(), base.get_mpf_t(), e);
    return r;
}

} // namespace

AsymptoticsReport asymptotic_ratios(int n_max, int p_max, const Rational& z)
{
    if (!(z > 0) || !(z < frac(1, 4)))
        throw std::invalid_argument("asymptotic_ratios: z must lie in (0, 1/4)");
    AsymptoticsReport rep;
    mpf_class pi(kPiDigits, kFloatBits);
    mpf_class zf = to_mpf(z);

    // (a) [t^n] B(t, z) against the transfer-theorem prediction.
    {
        std::vector<std::string> vars{"t"};
        std::vector<int> trunc{n_max + 1}; // one order lost to the division by t
        Series one = Series::constant(vars, trunc, 1);
        Series t = Series::variable(vars, trunc, "t");
        Rational zc = z;
        Series s8 = (one - Rational(8) * t).sqrt();
        Rational scale = frac(1, 4) / (Rational(1) - zc);
        Series inner = scale * ((one + s8).pow(2) -
                                Series::constant(vars, trunc, Rational(4) * zc));
        Series root = Rational(2) * inner.sqrt();
        Series num = Rational(8) * t + Series::constant(vars, trunc, 8 * zc) +
                     (one - s8 - Series::constant(vars, trunc, 4 * zc)) * root;
        Series B = frac(1, 16) * num.divided_by_power("t", 1);

        // (z-1)(4z-1)^3 > 0 on (0, 1/4).
        mpf_class disc = to_mpf((z - 1) * (4 * z - 1) * (4 * z - 1) * (4 * z - 1));
        mpf_class pref = to_mpf(frac(3, 2)) * zf / sqrt(pi * disc);
        for (long n : {1L, static_cast<long>(n_max) / 2, static_cast<long>(n_max)}) {
            Rational scaled = B.coeff("t", static_cast<int>(n)) /
                              Rational(int_pow(8, n));
            mpf_class val = to_mpf(scaled) * mpf_class(n * n, kFloatBits) *
                            sqrt(mpf_class(n, kFloatBits));
            rep.coeff_ratios.emplace_back(n, mpf_class(val / pref).get_d());
        }
    }

    // (b) C(p) against sqrt(3)/(2 pi) 4^p sqrt(p).
    // (c) Z(p) against (1/4) sqrt(3/pi) 4^p p^(-5/2).
    {
        std::vector<std::string> vars{"z"};
        std::vector<int> trunc{p_max};
        Series one = Series::constant(vars, trunc, 1);
        Series zz = Series::variable(vars, trunc, "z");
        Series G = ((one - zz) * (one - Rational(4) * zz).pow(3))
                       .inverse()
                       .sqrt(); // ((1-z)(1-4z)^3)^(-1/2)
        Series Zs = compute_Z(p_max);
        mpf_class sqrt3 = sqrt(mpf_class(3, kFloatBits));
        for (long p : {static_cast<long>(p_max) / 2,
                       3L * static_cast<long>(p_max) / 4,
                       static_cast<long>(p_max)}) {
            mpf_class four_p = pow_ui(mpf_class(4, kFloatBits), p);
            mpf_class sp = sqrt(mpf_class(p, kFloatBits));
            mpf_class Cp = mpf_class(3, kFloatBits) / (2 * sqrt(pi)) *
                           to_mpf(G.coeff("z", static_cast<int>(p) - 1));
            mpf_class Ctgt = sqrt3 / (2 * pi) * four_p * sp;
            rep.C_ratios.emplace_back(p, mpf_class(Cp / Ctgt).get_d());

            mpf_class Zp = to_mpf(Zs.coeff("z", static_cast<int>(p)));
            mpf_class Ztgt = sqrt3 / (4 * sqrt(pi)) * four_p /
                             (mpf_class(p * p, kFloatBits) * sp);
            rep.Z_ratios.emplace_back(p, mpf_class(Zp / Ztgt).get_d());
        }
    }
    return rep;
}

} // namespace altmap
