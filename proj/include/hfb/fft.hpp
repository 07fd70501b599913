// fft.hpp
// FFTW-backed transforms with the continuum normalization
//   fhat(k) = sum_x f(x) e^{-ik.x} dx^d,   f(x) = (1/L^d) sum_k fhat(k) e^{ik.x}
// so that a plane wave e^{ik0.x} has fhat = L^d at the k0 bin and Parseval
// reads  int |f|^2 dx = (1/L^d) sum_k |fhat|^2.  Kernels transform both slots
// with the same e^{-ik.x} sign.  Plans use FFTW_ESTIMATE (never MEASURE) so
// the algorithm choice, and hence the output bits, are run-independent.
#pragma once

#include <vector>

#include "hfb/grid.hpp"

namespace hfb {

// Field transforms (in place)
void to_fourier(Field& f);
void to_phys(Field& f);
Field fourier_of(const Field& f);

// Kernel transforms, both slots (in place)
void kernel_to_fourier(Kernel& K);
void kernel_to_phys(Kernel& K);

// Unscaled batched 1-d DFT: batch contiguous series data[b*len + j].
// sign -1 is the e^{-i...} direction.
void dft1d_batch(cplx* data, int len, int batch, int sign);

// Pointwise symbol application in Fourier space (caller keeps track of the
// representation).  Symbols are per Fourier bin, length np.
void apply_symbol(Field& f, const std::vector<cplx>& s);
// Multiply Khat(xi,eta) by sx(xi)*sy(eta); either may be null.
void kernel_apply_symbol(Kernel& K, const std::vector<cplx>* sx,
                         const std::vector<cplx>* sy);

// Convenience: physical-space field -> multiplier applied -> physical space.
Field fourier_multiplier(const Field& f, const std::vector<cplx>& s);

// Common symbol tables
std::vector<cplx> symbol_bessel(const Grid& g, double alpha);   // <k>^alpha
std::vector<cplx> symbol_riesz(const Grid& g, double alpha);    // |k|^alpha
std::vector<cplx> symbol_free_phase(const Grid& g, double t);   // e^{-i|k|^2 t}

} // namespace hfb
