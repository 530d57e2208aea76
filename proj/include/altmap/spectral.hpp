#ifndef ALTMAP_SPECTRAL_HPP
#define ALTMAP_SPECTRAL_HPP

#include <altmap/laurent.hpp>
#include <altmap/series.hpp>

#include <map>
#include <vector>

namespace altmap {

// Face weights of a general hypermap model. Weights live in a caller-chosen
// coefficient ring (the prototype must contain the vertex variable "t").
// Numeric weights that do not come with their own grading variable should be
// multiplied by a formal face-marker variable, otherwise the solver's graded
// iteration need not terminate (chains of bigons contribute at fixed vertex
// count). Degree-one inner faces are not allowed.
struct HypermapWeights {
    Series ring_zero;            // zero series of the coefficient ring
    std::map<int, Series> black; // degree -> weight (degree >= 2)
    std::map<int, Series> white;

    int black_degree() const { return black.empty() ? 2 : black.rbegin()->first; }
    int white_degree() const { return white.empty() ? 2 : white.rbegin()->first; }
};

// Solved parametrization data: x(z) = z + sum a_k z^{-k} (k = 0..dt-1),
// y(z) = V/z + sum b_k z^k (k = 0..d-1).
struct HypermapSpectralData {
    Series V;
    std::vector<Series> a;
    std::vector<Series> b;
};

enum class BoundaryColor { black, white };

// Solve the defining coefficient conditions by graded fixed-point iteration.
// Throws std::runtime_error if the iteration fails to stabilize inside the
// truncation window (non-contracting weight assignment or a bug).
HypermapSpectralData solve_spectral(const HypermapWeights& w);

// Residual check of both defining conditions, reported as exact Laurent
// polynomials that must vanish:
//   r1 = V*y(z) - V*sum_i t_i x(z)^{i-1} - V*t/z   restricted to powers >= -1,
//   r2 = V*x(z) - V*sum_i tt_i y(z)^{i-1} - t*z    restricted to powers <= 1
// (both scaled by V to stay polynomial; V is a nonzerodivisor).
bool conditions_hold(const HypermapWeights& w, const HypermapSpectralData& d);

// Monochromatic-boundary generating functions W_p (black) or W~_p (white),
// p = 0..p_max, extracted by reverting the spectral parametrization.
std::vector<Series> monochromatic_W(const HypermapWeights& w,
                                    const HypermapSpectralData& d,
                                    BoundaryColor color, int p_max);

// Grand generating functions as Laurent expansions; main variable is x^{-1}.
//   Y(x) = sum t_i x^{i-1} + sum_p W_p x^{-p-1}   (known through x^{-(depth)})
// W(x) is Y(x) minus the weight polynomial.
struct BlackExpansion {
    LSeries Y; // powers of x^{-1}
    LSeries W;
};
BlackExpansion expand_black(const HypermapWeights& w, const HypermapSpectralData& d,
                            int depth);

// Mirror expansion in y^{-1}: X(y) and W~(y). The extraction divides by
// powers of t (up to the number of a-coefficients minus one), which narrows
// the t-window of the result accordingly; pad the ring if the full order is
// needed.
struct WhiteExpansion {
    LSeries X;
    LSeries Wt;
};
WhiteExpansion expand_white(const HypermapWeights& w, const HypermapSpectralData& d,
                            int depth);

// Generic helper: given exact Laurent polynomials x(z) = z + ..., y(z) =
// V/z + ... over a common ring, expand y(z(x)) as a series in x^{-1}
// (powers x^{m-1} downward), reliable through x^{-depth}.
LSeries expand_y_of_x(const LSeries& xpoly, const LSeries& ypoly, int depth);

// Expand x(z(y)) as a series in y^{-1}. V must equal the z^{-1} coefficient
// of ypoly; every a_k is divided exactly by V^k during the expansion.
LSeries expand_x_of_y(const LSeries& xpoly, const LSeries& ypoly, const Series& V,
                      int depth);

} // namespace altmap

#endif
