#include "hfb/conserved.hpp"

#include <cmath>

#include "hfb/fft.hpp"

namespace hfb {

double particle_number(const HFBState& s) {
    return kernel_trace(s.gamma).real();
}

double kinetic_trace(const Kernel& K) {
    Kernel F = K;
    kernel_to_fourier(F);
    cplx s = 0.0;
    for (int x = 0; x < F.g.np; ++x) s += F.g.k2(x) * F.at(x, F.g.negbin(x));
    return (s / F.g.vol).real();
}

double pair_interaction(const Field& vN, const Kernel& K) {
    const Grid& g = K.g;
    double s = 0.0;
#pragma omp parallel for schedule(static) reduction(+ : s)
    for (int x = 0; x < g.np; ++x) {
        auto cx = g.coords(x);
        double row = 0.0;
        for (int y = 0; y < g.np; ++y) {
            auto cy = g.coords(y);
            std::array<int, 3> dc{cx[0] - cy[0], cx[1] - cy[1], cx[2] - cy[2]};
            row += vN[g.flat(dc)].real() * std::norm(K.at(x, y));
        }
        s += row;
    }
    return s * g.cell * g.cell;
}

double diag_interaction(const Field& vN, const Field& a, const Field& b) {
    const Grid& g = a.g;
    double s = 0.0;
    for (int x = 0; x < g.np; ++x) {
        auto cx = g.coords(x);
        double row = 0.0;
        for (int y = 0; y < g.np; ++y) {
            auto cy = g.coords(y);
            std::array<int, 3> dc{cx[0] - cy[0], cx[1] - cy[1], cx[2] - cy[2]};
            row += vN[g.flat(dc)].real() * b[y].real();
        }
        s += row * a[x].real();
    }
    return s * g.cell * g.cell;
}

double energy(const HFBState& s, const Field& vN) {
    double kin = kinetic_trace(s.gamma);
    double lam = 0.5 * pair_interaction(vN, s.lambda);
    double gam2 = 0.5 * pair_interaction(vN, s.gamma);
    Field dg = kernel_diag(s.gamma);
    double diag = 0.5 * diag_interaction(vN, dg, dg);
    Field p2(s.g);
    for (int i = 0; i < s.g.np; ++i) p2[i] = std::norm(s.phi[i]);
    double cond = diag_interaction(vN, p2, p2);
    return kin + lam + gam2 + diag - cond;
}

ConservedReport conserved_report(const HFBState& s, const Field& vN) {
    ConservedReport r;
    r.mass = particle_number(s);
    r.kinetic = kinetic_trace(s.gamma);
    r.e_lambda = 0.5 * pair_interaction(vN, s.lambda);
    r.e_gamma = 0.5 * pair_interaction(vN, s.gamma);
    Field dg = kernel_diag(s.gamma);
    r.e_diag = 0.5 * diag_interaction(vN, dg, dg);
    Field p2(s.g);
    for (int i = 0; i < s.g.np; ++i) p2[i] = std::norm(s.phi[i]);
    r.e_cond = diag_interaction(vN, p2, p2);
    r.energy = r.kinetic + r.e_lambda + r.e_gamma + r.e_diag - r.e_cond;
    return r;
}

} // namespace hfb
