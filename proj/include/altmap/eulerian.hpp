#ifndef ALTMAP_EULERIAN_HPP
#define ALTMAP_EULERIAN_HPP

#include <altmap/series.hpp>

#include <utility>
#include <vector>

namespace altmap {

// T(t,u): Eulerian triangulations with an alternating boundary of length 2r
// (not necessarily semi-simple), t per black triangle, u per boundary half-
// length. Obtained from the alternating series at m = 3 via the vertex count
// v = n + r + 1. Variables {"t", "u"}.
Series compute_T(int t_order, int u_order);

// Check T against its independent rational parametrization
//   T(V - 2V^2, W(1-2V)(1+VW)/(1+W)^2) = (1+W)(1-2V-V^2W)/((1-2V)(1+VW)).
bool T_parametrization_check(int v_order, int w_order);

// B(t,z): semi-simple boundary, closed square-root form. Variables {"t","z"}.
Series compute_B(int t_order, int z_order);

// Second route: solve T(t,u) = B(t, u T(t,u)) for B by reverting u -> u T.
Series compute_B_substitution(int t_order, int z_order);

// Residual of the degree-4 algebraic equation satisfied by B; zero series on
// the honest solution.
Series quartic_residual(const Series& B);

// Partition function generating series: sum_p Z(p) z^p, variable {"z"}.
Series compute_Z(int z_order);

// Ratio-trend report, all exact until the final division:
//   coeff_ratios: [t^n]B(t,z) against (3/2) z (pi (z-1)(4z-1)^3)^(-1/2) 8^n n^(-5/2)
//   C_ratios:     C(p) = 3/(2 sqrt(pi)) [z^(p-1)] ((1-z)(1-4z)^3)^(-1/2)
//                 against sqrt(3)/(2 pi) 4^p sqrt(p)
//   Z_ratios:     Z(p) against (1/4) sqrt(3/pi) 4^p p^(-5/2)
struct AsymptoticsReport {
    std::vector<std::pair<long, double>> coeff_ratios; // sampled n
    std::vector<std::pair<long, double>> C_ratios;     // sampled p
    std::vector<std::pair<long, double>> Z_ratios;     // sampled p
};
AsymptoticsReport asymptotic_ratios(int n_max, int p_max, const Rational& z);

} // namespace altmap

#endif
