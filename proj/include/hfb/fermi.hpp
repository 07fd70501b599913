// fermi.hpp
// The fermionic analogue: pair functions (omega, psi) with omega* = omega,
// psi^T = -psi, the algebraic constraint
//   -psi o conj(psi) + omega o omega - 2 omega = 0,
// unscaled interaction v, and the two displayed evolution equations.
#pragma once

#include "hfb/kernel.hpp"

namespace hfb {

struct FermiState {
    Grid g;
    Kernel omega;  // hermitian, omega(x,x) >= 0
    Kernel psi;    // antisymmetric

    FermiState() = default;
    explicit FermiState(const Grid& gg) : g(gg), omega(gg), psi(gg) {}
};

struct FermiRhs {
    Kernel domega;  // d omega / dt, Laplacians included (spectral)
    Kernel dpsi;
};

FermiRhs fermi_rhs(const FermiState& s, const Field& v);

// ||-psi o conj(psi) + omega o omega - 2 omega|| in the kernel L^2 metric
double fermi_constraint_residual(const FermiState& s);

// exactly constrained rank-2 state: omega = a (f conj(f) + g conj(g)),
// psi = sqrt(2a - a^2) (f g - g f), f,g orthonormal, 0 < a <= 2
FermiState fermi_rank2_state(const Field& f, const Field& gfun, double a);

FermiState fermi_rk4_step(const FermiState& s, const Field& v, double dt);

struct FermiConserved {
    double number_tr = 0;    // tr(omega)
    double number_half = 0;  // tr(omega)/2 (the other printed normalization)
    double energy = 0;
};
FermiConserved fermi_conserved(const FermiState& s, const Field& v);

} // namespace hfb
