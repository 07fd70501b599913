// kernel.hpp
// Algebra of two-particle kernels: composition (A o B)(x,y) = int A(x,z)B(z,y)dz
// realized as a matrix product with the quadrature weight dx^d, plus traces,
// diagonals, symmetry maps, and the affine (delta + smooth) variant.
#pragma once

#include <array>

#include "hfb/grid.hpp"

namespace hfb {

// C = A o B.  Row-parallel; each output element is one serial dot product,
// so bits do not depend on the thread count.
Kernel kernel_compose(const Kernel& A, const Kernel& B);

// trace = int K(x,x) dx
cplx kernel_trace(const Kernel& K);

// diagonal restriction x -> K(x,x)
Field kernel_diag(const Kernel& K);

// collapsed slice x -> K(x, x+w), w a lattice offset
Field kernel_slice(const Kernel& K, const std::array<int, 3>& w);

// slice on the centered diagonal x -> K(x+w, x-w)
Field kernel_slice_centered(const Kernel& K, const std::array<int, 3>& w);

Kernel kernel_transpose(const Kernel& K);
Kernel kernel_conj(const Kernel& K);
Kernel kernel_adjoint(const Kernel& K);       // conj transpose

// (K f)(x) = int K(x,y) f(y) dy
Field kernel_apply(const Kernel& K, const Field& f);

// outer product kernels: (f g)(x,y) = f(x) g(y)
Kernel kernel_outer(const Field& f, const Field& g);

// pointwise multiply by a difference profile: out(x,y) = v(x-y) K(x,y)
Kernel kernel_mul_difference(const Field& v, const Kernel& K);

// multiplication operators: out(x,y) = gl(x) K(x,y) gr(y)
Kernel kernel_mul_left(const Field& gl, const Kernel& K);
Kernel kernel_mul_right(const Kernel& K, const Field& gr);

// in-place linear combination A += c * B
void kernel_axpy(Kernel& A, cplx c, const Kernel& B);
void kernel_scale(Kernel& A, cplx c);

double kernel_max_abs(const Kernel& K);
double kernel_l2(const Kernel& K);            // double-integral L^2 norm
double kernel_hs_diff(const Kernel& A, const Kernel& B);

// symmetry defects in the same L^2 metric
double defect_symmetric(const Kernel& K);     // ||K - K^T||
double defect_hermitian(const Kernel& K);     // ||K - K*||

// smallest eigenvalue of the operator with kernel K (assumed hermitian);
// the operator matrix is K(x,y) * dx^d
double min_eigenvalue(const Kernel& K);

// affine kernels  alpha*delta + dense
Kernel affine_compose_dense(const AffineKernel& A, const Kernel& B);  // A o B
Kernel dense_compose_affine(const Kernel& A, const AffineKernel& B);  // A o B
AffineKernel affine_compose(const AffineKernel& A, const AffineKernel& B);

// discrete delta kernel: delta_{xy} / dx^d, the identity of composition
Kernel delta_kernel(const Grid& g);

} // namespace hfb
