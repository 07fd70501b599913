// integrator.hpp
// Time stepping for the (phi, Lambda, Gamma) system.  The exposed orientation
// of the vector field is
//   dphi/dt    = i Lap phi + i R_phi
//   dLambda/dt = i (Lap1+Lap2) Lambda - (i/N) vN(x1-x2) Lambda + i R_Lambda
//   dGamma/dt  = -i (Lap1-Lap2) Gamma - i conj(R_gammabar)
// Strang splitting uses exact sub-flows for the dispersive part (Fourier
// phases) and the (1/N) vN Lambda phase (pointwise exponential); the
// remaining nonlinear terms are advanced with an explicit midpoint rule.
// rk4 integrates the full assembled vector field and is the cross-oracle.
#pragma once

#include <functional>

#include "hfb/rhs.hpp"

namespace hfb {

enum class Scheme { strang, rk4 };
enum class RhsRoute { direct, bracket };

// exact dispersive flow over time dt (Fourier multiplier phases)
void linear_flow(HFBState& s, double dt);

// exact phase flow of the -(i/N) vN(x1-x2) Lambda term
void potential_flow(HFBState& s, const Field& vN, double dt);

// time derivative from the nonlinear integral terms only
struct Deriv {
    Field dphi;
    Kernel dlambda;
    Kernel dgamma;
};
Deriv nonlinear_deriv(const HFBState& s, const Field& vN, RhsRoute route);

// full vector field (dispersive + potential + nonlinear), assembled spectrally
Deriv full_deriv(const HFBState& s, const Field& vN, RhsRoute route);

HFBState step_strang(const HFBState& s, const Field& vN, double dt,
                     RhsRoute route = RhsRoute::direct);
HFBState step_rk4(const HFBState& s, const Field& vN, double dt,
                  RhsRoute route = RhsRoute::direct);

struct EvolveResult {
    HFBState state;
    int steps_done = 0;
    bool nan_abort = false;
};

// Runs nsteps of size dt; the observer (if set) sees the state after each
// step (and once for the initial state with step index 0).  Aborts on the
// first non-finite value, returning the last good state.
EvolveResult evolve(
    const HFBState& s0, const Field& vN, double dt, int nsteps, Scheme scheme,
    RhsRoute route = RhsRoute::direct,
    const std::function<void(int step, double t, const HFBState&)>& observer =
        nullptr);

bool state_finite(const HFBState& s);

// L^2-type distance between states (max over the three components)
double state_distance(const HFBState& a, const HFBState& b);

} // namespace hfb
