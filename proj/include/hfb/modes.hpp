// modes.hpp
// Band-limited mode representation of space-time kernels F(t,x,y) for the
// d=3 estimate checks, where dense n^3 x n^3 kernels are out of reach:
//   F(t,x,y) = sum_j a_j(t) e^{i(xi_j . x + eta_j . y)}
// with distinct integer frequency pairs and per-mode time series sampled on
// t_j = j*dt, j = 0..nt-1.  Time profiles are sums of harmonics c e^{i tau t}
// with continuous tau, so free and Duhamel evolutions have closed forms:
// per space mode with dispersion D = |xi|^2 + |eta|^2,
//   (int c(t-s) e^{i(t-s)Lap} e^{i tau s} ds) = chat(tau + D) e^{i tau t},
//   chat(w) = (1 - e^{-iwT}) / (iw),  c = indicator of [0,T].
// Space-time norms come from the same windowed, zero-padded DFT conventions
// as the dense path; L^q(dx) norms stream each time slice through FFTs on
// the n^3 grid, one group of modes with a common eta at a time.
#pragma once

#include "hfb/common.hpp"
#include "hfb/grid.hpp"

namespace hfb {

struct Harmonic {
    cplx c;
    double tau = 0.0;
};

struct Mode {
    std::array<int, 3> kx{0, 0, 0}; // integer frequencies, wavenumber 2 pi m / L
    std::array<int, 3> ky{0, 0, 0};
    std::vector<Harmonic> h;
};

struct ModeSet {
    Grid g;       // carries L and the streaming grid
    double T = 0; // window length; samples at t = j*dt, dt = T/nt
    int nt = 0;
    std::vector<Mode> modes;                // distinct (kx, ky) pairs
    std::vector<std::vector<cplx>> series;  // [j][t], one per mode

    double dt() const { return T / nt; }
    std::array<double, 3> kxi(int j) const;
    std::array<double, 3> keta(int j) const;
    double disp(int j) const; // |xi_j|^2 + |eta_j|^2
};

// chat(w) for the sharp window on [0, T]
cplx window_hat(double w, double T);

// random band-limited source: nmodes distinct frequency pairs uniform in
// {-kmax..kmax}^3 x {-kmax..kmax}^3, nharm harmonics each with complex
// Gaussian amplitudes and tau uniform in [-tau_max, tau_max]
ModeSet random_modeset(const Grid& g, double T, int nt, int nmodes, int kmax,
                       int nharm, double tau_max, Rng& rng);

// fill series from the harmonics:
void sample_source(ModeSet& ms);                       // a_j(t) = sum c e^{i tau t}
void sample_free(ModeSet& ms,
                 const std::vector<cplx>& amp0);       // amp0_j e^{-i D_j t}
void sample_duhamel(ModeSet& ms);                      // closed form above
// free + Duhamel of the same harmonics (the inhomogeneous solution)
void sample_solution(ModeSet& ms, const std::vector<cplx>& amp0);

// per-mode weight tables
std::vector<double> mode_weight_bessel(const ModeSet& ms, double ax, double ay);
std::vector<double> mode_weight_angle(const ModeSet& ms, double alpha); // <xi+eta>^alpha

// || w F ||_{X^b} with weight <tau + |xi|^2 + |eta|^2>^b, windowed and
// zero-padded like the dense path
double modes_xnorm(const ModeSet& ms, double b, const std::vector<double>& wt,
                   int pad_factor = 4);

// || w F ||_{L^p(dt) L^q(dx) L^2(dy)}, streaming the x slice through FFTs;
// p or q <= 0 means the sup
double modes_mixed_norm(const ModeSet& ms, double p, double q,
                        const std::vector<double>& wt);

// single-time variant of the above on the series sample t_index
double modes_mixed_space(const ModeSet& ms, int t_index, double q,
                         const std::vector<double>& wt);

// || w F(t=const) ||_{L^2(dx dy)} from amplitudes a_j
double modes_l2_space(const ModeSet& ms, const std::vector<cplx>& amp,
                      const std::vector<double>& wt);

// sup over the z list of || |d/dt|^{1/4} F(t, x, x+z) ||_{L^2(dt dx)}
double modes_quarter_time_sup(const ModeSet& ms,
                              const std::vector<std::array<int, 3>>& zlist,
                              int pad_factor = 4);

// deterministic z samples: a coarse sublattice of the torus
std::vector<std::array<int, 3>> coarse_zlist(const Grid& g, int per_axis);

} // namespace hfb
