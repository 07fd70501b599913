// norms.hpp
// Diagnostic norms on time traces: mixed L^p(dt)L^q(dx)L^2(dy) norms with
// Bessel weights, collapsing norms on diagonals x -> (x, x+w) and centered
// diagonals x -> (x+w, x-w), quarter time derivative norms, X^b norms with
// weight <tau + |xi|^2 +/- |eta|^2>^b, and smooth frequency projections
// P_{|xi -/+ eta| < 2^I} with 2^I < N^{beta'} <= 2^{I+1}.
//
// All time transforms zero-pad the window by pad_factor (default 4) before
// the DFT; the sharp window c(t) is the indicator of the sample range.
#pragma once

#include <string>
#include <utility>

#include "hfb/trace.hpp"

namespace hfb {

struct NormConfig {
    double alpha = 0.75;      // Bessel exponent, > 1/2
    double xb = 0.48;         // the "1/2-" exponent used in X^b terms
    double delta = 0.02;      // generic small gap
    double beta_prime = 0.9;  // frequency-splitting exponent, beta < beta' < 1
    int pad_factor = 4;
};

enum class Comp { lambda, gamma };

// -1 high part, 0 no projection, +1 low part
struct ProjSpec {
    int minus = 0; // on |xi - eta|
    int plus = 0;  // on |xi + eta|
};

// smooth cutoff: 1 on [-1,1], 0 outside (-2,2)
double smooth_cutoff(double s);
// dyadic projection scale 2^I with 2^I < N^{beta'} <= 2^{I+1}
double proj_scale(double N, double beta_prime);

// || <grad_x>^ax <grad_y>^ay P c(t) K ||_{L^p(dt) L^q(dx) L^2(dy)}
// (reversed swaps the roles of the two slots; p or q <= 0 means infinity)
double mixed_norm(const SpaceTimeTrace& tr, Comp comp, double ax, double ay,
                  double p, double q, bool reversed, ProjSpec proj = {},
                  double proj_cut = 0.0);

// || <grad>^bessel_pow |grad|^riesz_pow c(t) K(t, x, x+w) ||_{L^2(dt dx)};
// centered uses the K(t, x+w, x-w) convention instead
double collapse_norm(const SpaceTimeTrace& tr, Comp comp,
                     const std::array<int, 3>& w, double bessel_pow,
                     double riesz_pow, bool centered);
double collapse_sup(const SpaceTimeTrace& tr, Comp comp, double bessel_pow,
                    double riesz_pow, bool centered);

// || |d/dt|^{1/4} c(t) K(t, x, x+w) ||_{L^2(dt dx)}
double quarter_time_norm(const SpaceTimeTrace& tr, Comp comp,
                         const std::array<int, 3>& w, bool centered,
                         int pad_factor = 4);
double quarter_time_sup(const SpaceTimeTrace& tr, Comp comp, bool centered,
                        int pad_factor = 4);

// || <grad_x>^ax <grad_y>^ay P c(t) K ||_{X^b} with the weight
// <tau + |xi|^2 + |eta|^2>^b (sign_minus flips to tau + |xi|^2 - |eta|^2).
// Requires kernel snapshots.
double xsb_norm(const SpaceTimeTrace& tr, Comp comp, double b, bool sign_minus,
                double ax, double ay, ProjSpec proj = {}, double proj_cut = 0.0,
                int pad_factor = 4);

// || <grad>^alpha c(t) phi ||_{L^p(dt) L^q(dx)}
double strichartz_phi(const SpaceTimeTrace& tr, double alpha, double p,
                      double q);

struct NormReport {
    std::vector<std::pair<std::string, double>> entries;
    double get(const std::string& name) const;
    void put(const std::string& name, double v) { entries.emplace_back(name, v); }
    std::string csv() const; // deterministic two-column format
};

// The composite diagnostics: the Lambda norm N_T, the Gamma norm (dotted
// variant), the phi Strichartz norm, and the projected script norm of Lambda
// with its N^{-1}-weighted low-frequency term.
NormReport composite_norms(const SpaceTimeTrace& tr, const NormConfig& cfg);

} // namespace hfb
