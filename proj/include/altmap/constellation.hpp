#ifndef ALTMAP_CONSTELLATION_HPP
#define ALTMAP_CONSTELLATION_HPP

#include <altmap/series.hpp>
#include <altmap/spectral.hpp>

#include <vector>

namespace altmap {

// m-constellations: black inner faces of degree m, white inner faces of
// degree mi with weight x_i (i = 1..d), weight t per vertex.
struct ConstellationParams {
    int m; // >= 2
    int d; // >= 1
};

// Variable list {t, x1, ..., xd} of the weight ring.
std::vector<std::string> constellation_vars(int d);

// The vertex series: unique power-series solution of
//   V = t + sum_i binom(mi-1, i) x_i V^{(m-1)i}.
Series solve_V(const ConstellationParams& cp, int t_order, int x_order);

// alpha_k = sum_{i>=k} binom(mi-1, i-k) x_i V^{(m-1)i+k-1}, k = 1..d.
std::vector<Series> compute_alphas(const ConstellationParams& cp, const Series& V);

// A_r (alternating boundary of length 2r) as polynomials in the ring
// Q[V, a1..ad] (a_k standing for alpha_k), extracted by reverting
//   w(s) = s (1 + sum alpha_k s^k)^{m-2} / (1 + V s)^2
// inside A(w(s)) = 1 - (1 + sum alpha_k s^k)^{m-1} / (1 + V s).
// Element r of the result is A_r, r = 0..r_max.
std::vector<Series> alternating_A(const ConstellationParams& cp, int r_max);

// Substitute solved series for V and the alpha_k into such a polynomial.
Series eval_at_valpha(const Series& p, const Series& V,
                      const std::vector<Series>& alpha);

// Closed form for V^k in the specialization d = 1, x_1 = 1 (so that
// V = t + (m-1) V^{m-1}), as a univariate t-series; requires m >= 3.
// Lagrange inversion gives
//   V^k = sum_n k (m-1)^n / ((m-2)n + k) binom((m-1)n + k - 1, n) t^{(m-2)n+k}.
Series V_power_coeffs(int m, int k, int t_order);

// Number of vertices of a constellation with n_i white faces of degree mi:
// v = sum (mi - i - 1) n_i + 2.
long profile_vertices(int m, const std::vector<long>& profile);

// Number of rooted m-constellations with n_i white faces of degree mi
// (profile[i-1] = n_i):
//   m/(m-1) * (v + sum n_i - 2)!/v! * prod binom(mi-1, i)^{n_i} / n_i!.
Rational rooted_count(int m, const std::vector<long>& profile);

// Coefficient of x1^{n_1}...xd^{n_d} in V; the t-exponent is forced to v-1.
Rational lagV_coeff(int m, const std::vector<long>& profile);

// C = m/(m-1) * integral of (V - t) dt, the rooted-constellation series.
Series rooted_C(const ConstellationParams& cp, const Series& V);

// F_p (white monochromatic boundary of length mp, no boundary weight):
//   binom(mp, p) ( V^{(m-1)p+1}/((m-1)p+1)
//                  - sum_i i/(p+i) binom(mi-1, i) x_i V^{(m-1)(p+i)} ).
Series monochrom_F_white(const ConstellationParams& cp, int p, const Series& V);

// Kernel-method identities on the spectral curve, checked as Laurent-series
// identities in x^{-1} through the given depth:
//   A(omega(x)) = 1 - x^{m-1}/Y(x),
//   K(x, omega(x)) = 1 - A(omega) - omega x Y(x) = 0,
//   R(x, omega(x)) = omega x Y^2 - omega x^m Y - x^{m-1} A(omega) = 0,
// with omega(x) = x^{m-2}/Y(x)^2.
struct KernelReport {
    bool A_ok = false;
    bool K_ok = false;
    bool R_ok = false;
    int depth = 0; // deepest x^{-depth} coefficient certified
    bool ok() const { return A_ok && K_ok && R_ok; }
};
KernelReport kernel_identities_check(const ConstellationParams& cp, int t_order,
                                     int x_order, int depth);

// The spectral weights realizing the constellation model in the given ring.
HypermapWeights constellation_weights(const ConstellationParams& cp,
                                      int t_order, int x_order);

} // namespace altmap

#endif
