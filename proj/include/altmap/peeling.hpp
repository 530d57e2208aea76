#ifndef ALTMAP_PEELING_HPP
#define ALTMAP_PEELING_HPP

#include <altmap/spectral.hpp>

#include <vector>

namespace altmap {

// Mixed boundary condition: a black monochromatic stretch of length p
// followed by an alternating stretch of length 2r. Entries satisfy
// M_{p,0} = W_p and A_r = M_{0,r}.
struct MixedBoundaryTable {
    std::vector<std::vector<Series>> rows; // rows[r][p]
    int r_max = 0;
    int p_certified = 0; // entries with p <= p_certified passed stabilization
    int p_stored = 0;    // internal p-range actually computed

    const Series& at(int p, int r) const { return rows.at(r).at(p); }
    const Series& A(int r) const { return rows.at(r).at(0); }
};

// Fill the table from the one-step peeling of the first white boundary edge:
//   M_{p,r} = sum_i t_i M_{p+i,r-1} + sum_{p'=0}^p W_{p'} M_{p-p',r-1}
//             + sum_{r'=0}^{r-2} A_{r'} M_{p,r-r'-1}.
// W_p comes from the spectral solution of the same weights. The p-cutoff is
// chosen by doubling until every entry with p <= p_report is unchanged (high-p
// boundaries need many vertices, so they fall out of the t-window).
MixedBoundaryTable peel_recursion(const HypermapWeights& w, int r_max,
                                  int p_report);

// Assemble M(x,w), K(x,w), R(x,w) and report on the residual K*M - R, which
// must vanish identically. depth is the certified order in x^{-1}.
struct PeelResidualReport {
    bool ok = false;
    int depth = 0;
};
PeelResidualReport functional_equation_residual(const HypermapWeights& w,
                                                const MixedBoundaryTable& tbl);

} // namespace altmap

#endif
