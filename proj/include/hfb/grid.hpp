// grid.hpp
// Periodic torus [0,L)^d sampled on n points per axis, plus the Field and
// Kernel containers that live on it.  Flat indices are row-major over the
// d axes; Fourier bins use the usual wrap-around layout (m in [-n/2, n/2)).
#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "hfb/common.hpp"

namespace hfb {

struct Grid {
    int d = 1;          // spatial dimension, 1..3
    int n = 0;          // points per axis
    double L = 0.0;     // box length per axis
    int np = 0;         // n^d, points per field
    double dx = 0.0;    // L / n
    double cell = 0.0;  // dx^d, quadrature weight
    double vol = 0.0;   // L^d

    static Grid make(int d, int n, double L);

    bool operator==(const Grid&) const = default;

    // axis coordinate of lattice site index i (0..n-1)
    double x1(int i) const { return dx * i; }

    // wavenumber of 1-d Fourier bin i: 2*pi*m/L with m wrapped to [-n/2,n/2)
    double k1(int i) const {
        int m = (i < n / 2) ? i : i - n;
        return 2.0 * pi * m / L;
    }

    std::array<int, 3> coords(int flat) const {
        std::array<int, 3> c{0, 0, 0};
        for (int a = d - 1; a >= 0; --a) {
            c[a] = flat % n;
            flat /= n;
        }
        return c;
    }

    int flat(const std::array<int, 3>& c) const {
        int f = 0;
        for (int a = 0; a < d; ++a) f = f * n + ((c[a] % n + n) % n);
        return f;
    }

    std::array<double, 3> kvec(int fourier_flat) const {
        auto c = coords(fourier_flat);
        std::array<double, 3> k{0.0, 0.0, 0.0};
        for (int a = 0; a < d; ++a) k[a] = k1(c[a]);
        return k;
    }

    double k2(int fourier_flat) const {
        auto k = kvec(fourier_flat);
        double s = 0.0;
        for (int a = 0; a < d; ++a) s += k[a] * k[a];
        return s;
    }

    // lattice translation: index of x + w (w in lattice units, periodic)
    int shift(int flat_idx, const std::array<int, 3>& w) const {
        auto c = coords(flat_idx);
        for (int a = 0; a < d; ++a) c[a] += w[a];
        return flat(c);
    }

    // Fourier bin of -k for bin i (per axis: m -> -m mod n)
    int negbin(int fourier_flat) const {
        auto c = coords(fourier_flat);
        for (int a = 0; a < d; ++a) c[a] = (n - c[a]) % n;
        return flat(c);
    }

    double nyquist() const { return pi * n / L; }
};

// One-particle function on the grid (values, or Fourier coefficients when a
// routine says so).  Fourier convention:
//   fhat(k) = sum_x f(x) e^{-ik.x} dx^d,   f(x) = (1/L^d) sum_k fhat(k) e^{ik.x}
struct Field {
    Grid g;
    std::vector<cplx> a;

    Field() = default;
    explicit Field(const Grid& gg) : g(gg), a(gg.np, cplx(0.0)) {}

    cplx& operator[](int i) { return a[i]; }
    const cplx& operator[](int i) const { return a[i]; }
    int size() const { return g.np; }
};

// Two-particle kernel K(x,y), row-major a[x*np + y].  Both Fourier slots are
// transformed with the e^{-i k.x} sign, matching the Field convention.
struct Kernel {
    Grid g;
    std::vector<cplx> a;

    Kernel() = default;
    explicit Kernel(const Grid& gg)
        : g(gg), a(static_cast<size_t>(gg.np) * gg.np, cplx(0.0)) {}

    cplx& at(int x, int y) { return a[static_cast<size_t>(x) * g.np + y]; }
    const cplx& at(int x, int y) const {
        return a[static_cast<size_t>(x) * g.np + y];
    }
    int rows() const { return g.np; }
};

// Operator of the form alpha * delta + smooth dense part; the ch kernel and
// the multiplication operators in the bracket assembly have this shape.
// As an operator, (A f)(x) = alpha f(x) + int dense(x,y) f(y) dy.
struct AffineKernel {
    cplx alpha{0.0};
    Kernel dense;

    AffineKernel() = default;
    explicit AffineKernel(const Grid& g, cplx al = cplx(0.0))
        : alpha(al), dense(g) {}
};

} // namespace hfb
