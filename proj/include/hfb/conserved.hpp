// conserved.hpp
// Conserved functionals of the (phi, Lambda, Gamma) system: the normalized
// particle number M = tr(Gamma) and the energy per particle
//   E = tr{grad1 . grad2 Gamma}
//     + 1/2 int vN (|Lambda|^2 + |Gamma|^2 + Gamma(x1,x1)Gamma(x2,x2))
//     - int vN |phi(x1)|^2 |phi(x2)|^2.
// The quadratic weights are the Wick weights of the two-body interaction on a
// quasifree state; the last term removes the condensate double counting (the
// pure-condensate slice of each 1/2 term adds up to 3/2, the physical Hartree
// weight is 1/2).  Checked against the flow: dE/dt vanishes identically along
// full_deriv on pair-excitation data, and a least-squares fit of the weights
// from measured term rates reproduces (1/2, 1/2, 1/2, -1) to 1e-4.
#pragma once

#include "hfb/state.hpp"

namespace hfb {

double particle_number(const HFBState& s);   // tr Gamma (real part)

// tr{grad_x . grad_y K}: Fourier anti-diagonal sum (1/L^d) sum_k |k|^2 Khat(k,-k)
double kinetic_trace(const Kernel& K);

// int dx1 dx2 vN(x1-x2) F(x1,x2) for pointwise |.|^2-style integrands
double pair_interaction(const Field& vN, const Kernel& K);       // vN |K|^2
double diag_interaction(const Field& vN, const Field& a,
                        const Field& b);                         // vN(x-y) a(x) b(y)

double energy(const HFBState& s, const Field& vN);

struct ConservedReport {
    double mass = 0;
    double energy = 0;
    double kinetic = 0;
    // the five summands of E (kinetic repeated for completeness)
    double e_lambda = 0;
    double e_gamma = 0;
    double e_diag = 0;
    double e_cond = 0;   // enters E with a minus sign
};
ConservedReport conserved_report(const HFBState& s, const Field& vN);

} // namespace hfb
