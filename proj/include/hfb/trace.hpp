// trace.hpp
// Time trace of an evolution on the window [0,T): uniformly spaced samples
// t_j = j*dt, j = 0..nt-1 (left endpoints; the sharp window c(t) is the
// indicator of [0,T) on the sample grid).  Diagonal slices are kept every
// sample for every configured offset; full kernel snapshots every
// kernel_stride samples.
#pragma once

#include "hfb/integrator.hpp"

namespace hfb {

struct SpaceTimeTrace {
    Grid g;
    double dt = 0.0;       // sample spacing
    int nt = 0;            // number of samples
    double N = 1.0;        // particle-number scale of the run
    std::vector<std::array<int, 3>> offsets;

    std::vector<cplx> phi;                      // [t*np + i]
    std::vector<std::vector<cplx>> lambda_slice; // [w][t*np + i]
    std::vector<std::vector<cplx>> gamma_slice;

    int kernel_stride = 0; // 0 = no snapshots
    std::vector<Kernel> lambda_snap, gamma_snap; // at samples j*stride

    // run outcome (not serialized): set when the evolution hit a non-finite
    // value; samples 0..recorded-1 are valid
    bool nan_abort = false;
    int recorded = 0;

    double time(int j) const { return dt * j; }
    int snaps() const { return static_cast<int>(lambda_snap.size()); }
};

// Offsets used for the collapsing sups: in d=1 every lattice offset (the sup
// is exact); otherwise 0 and +/- axis offsets together with their doubles
// (the doubled list keeps the centered-diagonal slices available).
std::vector<std::array<int, 3>> default_offsets(const Grid& g);

// Evolve nsteps of size dt and record the first nsteps samples.
SpaceTimeTrace record_evolution(const HFBState& s0, const Field& vN, double dt,
                                int nsteps, Scheme scheme, RhsRoute route,
                                const std::vector<std::array<int, 3>>& offsets,
                                int kernel_stride);

// trace restricted to the first nt_sub samples (window [0, nt_sub*dt))
SpaceTimeTrace truncate_trace(const SpaceTimeTrace& tr, int nt_sub);

} // namespace hfb
