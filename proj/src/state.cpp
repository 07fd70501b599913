#include "hfb/state.hpp"

#include <cmath>
#include <stdexcept>

#include "hfb/fft.hpp"

namespace hfb {

ShCh sh_ch_series(const Kernel& k, double tail_tol, int max_terms) {
    ShCh out;
    out.sh = k;
    out.ch = AffineKernel(k.g, cplx(1.0));

    double knorm = kernel_l2(k);
    if (knorm > 30.0)
        throw std::runtime_error("sh_ch_series: ||k|| too large for the series");

    Kernel B = kernel_compose(kernel_conj(k), k); // B = conj(k) o k
    Kernel sh_term = k;                           // k o B^m / (2m+1)!
    Kernel ch_term = B;                           // B^m / (2m)!
    kernel_scale(ch_term, cplx(0.5));
    kernel_axpy(out.ch.dense, cplx(1.0), ch_term);
    out.terms = 1;

    for (int m = 1; m <= max_terms; ++m) {
        sh_term = kernel_compose(sh_term, B);
        kernel_scale(sh_term, cplx(1.0 / ((2.0 * m) * (2.0 * m + 1.0))));
        kernel_axpy(out.sh, cplx(1.0), sh_term);
        if (m >= 1) {
            ch_term = kernel_compose(ch_term, B);
            kernel_scale(ch_term, cplx(1.0 / ((2.0 * m + 1.0) * (2.0 * m + 2.0))));
            kernel_axpy(out.ch.dense, cplx(1.0), ch_term);
        }
        ++out.terms;
        double t = std::max(kernel_l2(sh_term), kernel_l2(ch_term));
        if (t < tail_tol) {
            // geometric-style bound on everything dropped
            out.tail = t * std::cosh(knorm);
            return out;
        }
    }
    throw std::runtime_error("sh_ch_series: series did not reach tail tolerance");
}

HFBState from_pair_excitation(const Field& phi, const Kernel& k, double N,
                              double tail_tol) {
    HFBState s(phi.g, N);
    s.phi = phi;

    Kernel two_k = k;
    kernel_scale(two_k, cplx(2.0));
    ShCh at_k = sh_ch_series(k, tail_tol);
    ShCh at_2k = sh_ch_series(two_k, tail_tol);

    // Lambda = phi(x1) phi(x2) + (1/2N) sh(2k)
    s.lambda = kernel_outer(phi, phi);
    kernel_axpy(s.lambda, cplx(0.5 / N), at_2k.sh);

    // Gamma = conj(phi)(x1) phi(x2) + (1/N) conj(sh) o sh
    Field phibar(phi.g);
    for (int i = 0; i < phi.g.np; ++i) phibar[i] = std::conj(phi[i]);
    s.gamma = kernel_outer(phibar, phi);
    Kernel shsh = kernel_compose(kernel_conj(at_k.sh), at_k.sh);
    kernel_axpy(s.gamma, cplx(1.0 / N), shsh);
    return s;
}

double closure_defect(const Kernel& k, double tail_tol) {
    ShCh sc = sh_ch_series(k, tail_tol);
    // c o c = delta + 2C + C o C with C the smooth part of ch
    Kernel lhs = kernel_compose(sc.ch.dense, sc.ch.dense);
    kernel_axpy(lhs, cplx(2.0), sc.ch.dense);
    Kernel rhs = kernel_compose(kernel_conj(sc.sh), sc.sh);
    return kernel_hs_diff(lhs, rhs);
}

ValidationReport validate(const HFBState& s) {
    ValidationReport r;
    r.lambda_sym_defect = defect_symmetric(s.lambda);
    r.gamma_herm_defect = defect_hermitian(s.gamma);
    Kernel red = s.gamma;
    Field phibar(s.g);
    for (int i = 0; i < s.g.np; ++i) phibar[i] = std::conj(s.phi[i]);
    kernel_axpy(red, cplx(-1.0), kernel_outer(phibar, s.phi));
    r.psd_min_eig = min_eigenvalue(red);
    for (const auto& z : s.phi.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) r.finite = false;
    for (const auto& z : s.lambda.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) r.finite = false;
    for (const auto& z : s.gamma.a)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) r.finite = false;
    return r;
}

double field_grad_sq(const Field& phi) {
    Field f = fourier_of(phi);
    double s = 0.0;
    for (int i = 0; i < f.g.np; ++i) s += f.g.k2(i) * std::norm(f.a[i]);
    return s / f.g.vol;
}

double kernel_grad_sq(const Kernel& u) {
    Kernel K = u;
    kernel_to_fourier(K);
    const int np = K.g.np;
    double s = 0.0;
    for (int x = 0; x < np; ++x) {
        double kx = K.g.k2(x);
        for (int y = 0; y < np; ++y)
            s += (kx + K.g.k2(y)) * std::norm(K.at(x, y));
    }
    return s / (K.g.vol * K.g.vol);
}

double field_l2(const Field& f) {
    double s = 0.0;
    for (const auto& z : f.a) s += std::norm(z);
    return std::sqrt(s * f.g.cell);
}

HFBState random_state(const Grid& g, double N, Rng& rng, double scale) {
    HFBState s(g, N);
    for (int i = 0; i < g.np; ++i) s.phi[i] = scale * rng.cnormal();
    const int np = g.np;
    // symmetric Lambda
    for (int x = 0; x < np; ++x)
        for (int y = x; y < np; ++y) {
            cplx z = scale * rng.cnormal();
            s.lambda.at(x, y) = z;
            s.lambda.at(y, x) = z;
        }
    // hermitian Gamma
    for (int x = 0; x < np; ++x) {
        s.gamma.at(x, x) = scale * rng.normal();
        for (int y = x + 1; y < np; ++y) {
            cplx z = scale * rng.cnormal();
            s.gamma.at(x, y) = z;
            s.gamma.at(y, x) = std::conj(z);
        }
    }
    return s;
}

} // namespace hfb
