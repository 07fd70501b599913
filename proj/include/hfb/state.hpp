// state.hpp
// The (phi, Lambda, Gamma) triple and its construction from a pair-excitation
// kernel k through the operator series
//   sh(k) = k + k o conj(k) o k / 3! + ...
//   ch(k) = delta + conj(k) o k / 2! + ...            (affine: delta + smooth)
// with the closures
//   Lambda = phi phi + (1/2N) sh(2k),   Gamma = conj(phi) phi + (1/N) sh* o sh.
#pragma once

#include "hfb/kernel.hpp"

namespace hfb {

struct HFBState {
    Grid g;
    double N = 1.0;   // particle-number scale
    Field phi;
    Kernel lambda;    // symmetric:  Lambda^T = Lambda
    Kernel gamma;     // hermitian:  Gamma* = Gamma

    HFBState() = default;
    HFBState(const Grid& gg, double NN)
        : g(gg), N(NN), phi(gg), lambda(gg), gamma(gg) {}
};

struct ShCh {
    Kernel sh;        // sh(k)
    AffineKernel ch;  // ch(k), alpha = 1
    int terms = 0;    // series terms summed
    double tail = 0;  // Hilbert-Schmidt bound on the truncated tail
};

// Sums the series until the next term's HS norm drops below tail_tol
// (at most max_terms terms).  Throws if ||k||_HS is too large to converge
// within the allowed depth.
ShCh sh_ch_series(const Kernel& k, double tail_tol = 1e-14,
                  int max_terms = 40);

HFBState from_pair_excitation(const Field& phi, const Kernel& k, double N,
                              double tail_tol = 1e-14);

// defect of the hyperbolic identity  c o c = delta + conj(u) o u
double closure_defect(const Kernel& k, double tail_tol = 1e-14);

struct ValidationReport {
    double lambda_sym_defect = 0.0;
    double gamma_herm_defect = 0.0;
    double psd_min_eig = 0.0;      // min eigenvalue of Gamma - conj(phi) phi
    bool finite = true;
    bool ok(double sym_tol, double psd_tol) const {
        return finite && lambda_sym_defect <= sym_tol &&
               gamma_herm_defect <= sym_tol && psd_min_eig >= -psd_tol;
    }
};
ValidationReport validate(const HFBState& s);

// gradient energies used by the kinetic decomposition
double field_grad_sq(const Field& phi);          // int |grad phi|^2
double kernel_grad_sq(const Kernel& u);          // int |grad_x u|^2 + |grad_y u|^2
double field_l2(const Field& f);                 // sqrt(int |f|^2)

// random states with the correct symmetry tags (for oracle ensembles)
HFBState random_state(const Grid& g, double N, Rng& rng, double scale = 1.0);

} // namespace hfb
