#include "hfb/kernel.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace hfb {

Kernel kernel_compose(const Kernel& A, const Kernel& B) {
    if (!(A.g == B.g)) throw std::invalid_argument("compose: grid mismatch");
    const int np = A.g.np;
    const double w = A.g.cell;
    Kernel C(A.g);
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x) {
        const cplx* arow = A.a.data() + static_cast<size_t>(x) * np;
        cplx* crow = C.a.data() + static_cast<size_t>(x) * np;
        for (int z = 0; z < np; ++z) {
            cplx axz = arow[z] * w;
            if (axz == cplx(0.0)) continue;
            const cplx* brow = B.a.data() + static_cast<size_t>(z) * np;
            for (int y = 0; y < np; ++y) crow[y] += axz * brow[y];
        }
    }
    return C;
}

cplx kernel_trace(const Kernel& K) {
    cplx s = 0.0;
    for (int x = 0; x < K.g.np; ++x) s += K.at(x, x);
    return s * K.g.cell;
}

Field kernel_diag(const Kernel& K) {
    Field f(K.g);
    for (int x = 0; x < K.g.np; ++x) f[x] = K.at(x, x);
    return f;
}

Field kernel_slice(const Kernel& K, const std::array<int, 3>& w) {
    Field f(K.g);
    for (int x = 0; x < K.g.np; ++x) f[x] = K.at(x, K.g.shift(x, w));
    return f;
}

Field kernel_slice_centered(const Kernel& K, const std::array<int, 3>& w) {
    Field f(K.g);
    std::array<int, 3> mw{-w[0], -w[1], -w[2]};
    for (int x = 0; x < K.g.np; ++x)
        f[x] = K.at(K.g.shift(x, w), K.g.shift(x, mw));
    return f;
}

Kernel kernel_transpose(const Kernel& K) {
    Kernel T(K.g);
    const int np = K.g.np;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) T.at(x, y) = K.at(y, x);
    return T;
}

Kernel kernel_conj(const Kernel& K) {
    Kernel C(K.g);
    for (size_t i = 0; i < K.a.size(); ++i) C.a[i] = std::conj(K.a[i]);
    return C;
}

Kernel kernel_adjoint(const Kernel& K) {
    Kernel A(K.g);
    const int np = K.g.np;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) A.at(x, y) = std::conj(K.at(y, x));
    return A;
}

Field kernel_apply(const Kernel& K, const Field& f) {
    Field out(K.g);
    const int np = K.g.np;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x) {
        const cplx* row = K.a.data() + static_cast<size_t>(x) * np;
        cplx s = 0.0;
        for (int y = 0; y < np; ++y) s += row[y] * f[y];
        out[x] = s * K.g.cell;
    }
    return out;
}

Kernel kernel_outer(const Field& f, const Field& g) {
    Kernel K(f.g);
    const int np = f.g.np;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) K.at(x, y) = f[x] * g[y];
    return K;
}

Kernel kernel_mul_difference(const Field& v, const Kernel& K) {
    Kernel out(K.g);
    const int np = K.g.np;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x) {
        auto cx = K.g.coords(x);
        for (int y = 0; y < np; ++y) {
            auto cy = K.g.coords(y);
            std::array<int, 3> dcoord{cx[0] - cy[0], cx[1] - cy[1],
                                      cx[2] - cy[2]};
            out.at(x, y) = v[K.g.flat(dcoord)] * K.at(x, y);
        }
    }
    return out;
}

Kernel kernel_mul_left(const Field& gl, const Kernel& K) {
    Kernel out(K.g);
    const int np = K.g.np;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) out.at(x, y) = gl[x] * K.at(x, y);
    return out;
}

Kernel kernel_mul_right(const Kernel& K, const Field& gr) {
    Kernel out(K.g);
    const int np = K.g.np;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) out.at(x, y) = K.at(x, y) * gr[y];
    return out;
}

void kernel_axpy(Kernel& A, cplx c, const Kernel& B) {
    for (size_t i = 0; i < A.a.size(); ++i) A.a[i] += c * B.a[i];
}

void kernel_scale(Kernel& A, cplx c) {
    for (auto& z : A.a) z *= c;
}

double kernel_max_abs(const Kernel& K) {
    double m = 0.0;
    for (const auto& z : K.a) m = std::max(m, std::abs(z));
    return m;
}

double kernel_l2(const Kernel& K) {
    double s = 0.0;
    for (const auto& z : K.a) s += std::norm(z);
    return std::sqrt(s * K.g.cell * K.g.cell);
}

double kernel_hs_diff(const Kernel& A, const Kernel& B) {
    double s = 0.0;
    for (size_t i = 0; i < A.a.size(); ++i) s += std::norm(A.a[i] - B.a[i]);
    return std::sqrt(s * A.g.cell * A.g.cell);
}

double defect_symmetric(const Kernel& K) {
    double s = 0.0;
    const int np = K.g.np;
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) s += std::norm(K.at(x, y) - K.at(y, x));
    return std::sqrt(s * K.g.cell * K.g.cell);
}

double defect_hermitian(const Kernel& K) {
    double s = 0.0;
    const int np = K.g.np;
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y)
            s += std::norm(K.at(x, y) - std::conj(K.at(y, x)));
    return std::sqrt(s * K.g.cell * K.g.cell);
}

double min_eigenvalue(const Kernel& K) {
    const int np = K.g.np;
    Eigen::MatrixXcd M(np, np);
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) M(x, y) = K.at(x, y) * K.g.cell;
    // symmetrize away rounding before the solve
    Eigen::MatrixXcd H = 0.5 * (M + M.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(H,
                                                       Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
}

Kernel affine_compose_dense(const AffineKernel& A, const Kernel& B) {
    Kernel C = kernel_compose(A.dense, B);
    kernel_axpy(C, A.alpha, B);
    return C;
}

Kernel dense_compose_affine(const Kernel& A, const AffineKernel& B) {
    Kernel C = kernel_compose(A, B.dense);
    kernel_axpy(C, B.alpha, A);
    return C;
}

AffineKernel affine_compose(const AffineKernel& A, const AffineKernel& B) {
    AffineKernel C(A.dense.g, A.alpha * B.alpha);
    C.dense = kernel_compose(A.dense, B.dense);
    kernel_axpy(C.dense, A.alpha, B.dense);
    kernel_axpy(C.dense, B.alpha, A.dense);
    return C;
}

Kernel delta_kernel(const Grid& g) {
    Kernel K(g);
    for (int x = 0; x < g.np; ++x) K.at(x, x) = 1.0 / g.cell;
    return K;
}

} // namespace hfb
