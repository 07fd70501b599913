// rhs.hpp
// Right-hand sides of the evolution system, in the shared orientation
//   (1/i d/dt - Lap_x1) phi                          = R_phi
//   (1/i d/dt - Lap_x1 - Lap_x2 + vN/N) Lambda       = R_Lambda
//   (1/i d/dt - Lap_x1 + Lap_x2) conj(Gamma)         = R_gammabar
// Two independent assemblies are kept: rhs_direct codes the displayed
// integral terms one by one (Fourier convolutions + compositions); rhs_bracket
// codes the commutator/anticommutator forms
//   [A,B] = A o B - B* o A*,   {A,B} = A o B + B^T o A^T
// and converts its Gamma output (stated for Gamma) to the conj(Gamma)
// orientation by conjugation.  The two must agree on states carrying the
// symmetry tags (Lambda symmetric, Gamma hermitian).
#pragma once

#include "hfb/state.hpp"

namespace hfb {

struct RhsOutput {
    Field dphi;
    Kernel dlambda;
    Kernel dgamma_bar;
};

// (vN * diag K)(x) = int vN(x-y) K(y,y) dy, by Fourier multiplication
Field conv_diag(const Field& vN, const Kernel& K);

// convolution of two fields, vN * f, by Fourier multiplication
Field conv_field(const Field& vN, const Field& f);

Kernel bracket_comm(const Kernel& A, const Kernel& B);  // [A,B]
Kernel bracket_anti(const Kernel& A, const Kernel& B);  // {A,B}
// brackets where the left operand is multiplication by g(x) (times delta)
Kernel bracket_comm_mult(const Field& g, const Kernel& B);
Kernel bracket_anti_mult(const Field& g, const Kernel& B);

RhsOutput rhs_direct(const HFBState& s, const Field& vN);
RhsOutput rhs_bracket(const HFBState& s, const Field& vN);

double rhs_distance(const RhsOutput& a, const RhsOutput& b);

} // namespace hfb
