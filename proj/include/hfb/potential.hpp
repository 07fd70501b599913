// potential.hpp
// The mean-field interaction v_N = N^{d*beta} v(N^beta x), built on the
// Fourier side: vhat_N(xi) = vhat(xi/N^beta) with vhat a fixed radial profile
// supported in the unit ball.  Sampling is exact (no aliasing) whenever
// N^beta <= pi*n/L, the resolved regime.
#pragma once

#include <string>

#include "hfb/grid.hpp"

namespace hfb {

struct PotentialSpec {
    std::string profile = "bump"; // radial profile of vhat
    double amplitude = 1.0;       // overall multiple
    double beta = 0.5;            // scaling exponent, 0 <= beta < 1
    double N = 1.0;               // particle-number scale
};

// radial profile vhat(r) (unscaled, r = |xi|)
//   "bump":  exp(-1/(1-r^2)) for r<1, else 0       (default, vhat(0)=1/e)
//   "cos2":  cos(pi r / 2)^2 for r<1, else 0
double vhat_profile(const std::string& profile, double r);

// scaled Fourier data on the grid: vhat_N at each bin
std::vector<cplx> vhat_samples(const Grid& g, const PotentialSpec& p);

// sampled v_N in physical space (real by symmetry; the imaginary part is
// zeroed so evenness/realness hold exactly)
Field sample_vN(const Grid& g, const PotentialSpec& p);

// exact mass  int v_N dx = amplitude * vhat(0), independent of N
double vN_mass(const PotentialSpec& p);

bool resolved(const Grid& g, const PotentialSpec& p);

// hypothesis checks for a pair (v, majorant w)
struct HypothesesReport {
    bool support_ok = false;   // vhat vanishes outside the unit ball
    bool majorant_ok = false;  // |vhat| <= what pointwise (radial sample)
    bool beta_ok = false;      // beta < 1
    bool ok() const { return support_ok && majorant_ok && beta_ok; }
};
HypothesesReport check_hypotheses(const PotentialSpec& v,
                                  const PotentialSpec& majorant);

// lattice L^p norm by Riemann sum
double field_lp(const Field& f, double p);

// d=3 radial quadrature of  v(s) = (1/2pi^2 s) int_0^1 vhat(rho) rho sin(rho s) drho
double v_radial3(const std::string& profile, double amplitude, double s);

// ||v_N||_{L^{3/2}(R^3)} by refined radial quadrature (d=3 continuum)
double vN_l32_radial(const PotentialSpec& p);

} // namespace hfb
