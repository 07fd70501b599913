// experiments.hpp
// The scientific harness: N-sweeps probing uniformity of the diagnostic
// norms in the particle number, mode-ensemble verifiers for the linear
// estimates (all in d=3, where the exponent arithmetic lives), the M log M
// quadrature check, and the oracle ledger tying the independent
// implementations together.
#pragma once

#include "hfb/conserved.hpp"
#include "hfb/modes.hpp"
#include "hfb/norms.hpp"
#include "hfb/potential.hpp"

namespace hfb {

// shared initial-data recipe: the same O(1) profiles instantiated for every
// N; phi a periodized Gaussian bump, pair excitation k = sigma f (x) f with
// f a normalized bump
struct InitRecipe {
    double phi_amp = 0.6;
    double phi_width = 0.18;  // std dev as a fraction of L
    double exc_sigma = 0.5;
    double exc_width = 0.12;
};

Field gauss_bump(const Grid& g, double width_frac);
HFBState make_initial(const Grid& g, double N, const InitRecipe& r);

struct SweepConfig {
    Grid g;
    PotentialSpec pot;         // pot.N is overwritten per sweep point
    std::vector<double> Nlist; // strictly increasing
    double T = 0.25;
    double dt = 1e-3;
    int store_every = 5;       // kernel snapshot stride
    int offset_stride = 1;     // thin the collapse-offset list
    InitRecipe init;
    NormConfig norms;
    Scheme scheme = Scheme::strang;
};

struct SweepEntry {
    double N = 0;
    NormReport quarter, half, full; // windows [0,T/4), [0,T/2), [0,T)
    std::vector<ConservedReport> conserved; // at the snapshot times
    bool failed = false;
    std::string error;
};

struct SweepReport {
    std::vector<SweepEntry> entries;
    // per norm key, over the non-failed entries' full-window reports
    std::vector<std::pair<std::string, double>> ratios; // max/min
    std::vector<std::pair<std::string, double>> slopes; // log-log, top half
    double ratio(const std::string& key) const;
    double slope(const std::string& key) const;
    std::string csv() const;
};

SweepReport n_sweep(const SweepConfig& cfg);

struct LemmaCheck {
    std::string id;
    int ensemble = 0;
    std::vector<double> ratios;      // per sample at the finest level
    double max_ratio = 0;
    std::vector<double> level_param; // refinement parameter per level
    std::vector<double> level_max;   // max ratio per level
    double trend_slope = 0;          // log(level_max) vs log(level_param)
    std::vector<std::pair<std::string, double>> extra;
    bool finite() const;
    std::string csv() const;   // per-sample ratios
    std::string json() const;  // summary
};

// || Duhamel(F) ||_{X^b} vs || F ||_{X^{b-1}}, refined in time resolution
LemmaCheck verify_duhamel(double b, int ensemble, std::uint64_t seed,
                          const std::vector<int>& nt_levels = {32, 64, 128});

// || F ||_{L^p L^q L^2} vs || F ||_{X^delta} under 2/p + 3/q = (5-4 delta)/2,
// refined in the streaming grid size
LemmaCheck verify_strichartz(double delta, double p, double q, int ensemble,
                             std::uint64_t seed,
                             const std::vector<int>& n_levels = {12, 16, 24});
// the q forced by (delta, p)
double strichartz_admissible_q(double delta, double p);

// sup_z quarter-time collapse of solutions vs data + two weighted X norms of
// the source
LemmaCheck verify_quartertime(int ensemble, std::uint64_t seed,
                              double alpha = 0.75, double eps = 0.1,
                              const std::vector<int>& n_levels = {12, 16});

// || F ||_{L^q(dx)L^2(dy)} vs || <grad_x + grad_y>^alpha F ||_{L^p(dx)L^2(dy)}
// with 1/q = 1/p - alpha/3
LemmaCheck verify_sobolev_angle(int ensemble, std::uint64_t seed,
                                double alpha = 1.0, double p = 2.0,
                                const std::vector<int>& n_levels = {12, 16,
                                                                    24});

// int_{|eta|<M} d eta / (1 + |A + |eta|^2|)  against  M log M, sup over A
LemmaCheck verify_mlogm(const std::vector<double>& Mlist,
                        const std::vector<double>& Alist, double tol = 1e-8);
// the radial integral itself, by adaptive quadrature
double mlogm_integral(double M, double A, double tol = 1e-8);

struct OracleEntry {
    std::string name;
    double residual = 0;
    double tol = 0;
    bool pass = false;
};
struct OracleLedger {
    std::vector<OracleEntry> entries;
    bool all_pass() const;
    std::string text() const;
};

// runs every cross-implementation pairing at a small d=1 size
OracleLedger oracle_suite(std::uint64_t seed, int n = 16);

} // namespace hfb
