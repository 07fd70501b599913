#include "hfb/integrator.hpp"

#include <cmath>

#include "hfb/fft.hpp"

namespace hfb {

namespace {

// phase tables e^{i phase * dt} with phase(x-slot, y-slot) additive
void kernel_phase(Kernel& K, const Grid& g, double cx, double cy, double dt) {
    // multiply Khat(xi,eta) by e^{i dt (cx |xi|^2 + cy |eta|^2)}
    kernel_to_fourier(K);
    const int np = g.np;
    std::vector<double> k2(np);
    for (int i = 0; i < np; ++i) k2[i] = g.k2(i);
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x) {
        for (int y = 0; y < np; ++y) {
            double ph = dt * (cx * k2[x] + cy * k2[y]);
            K.at(x, y) *= cplx(std::cos(ph), std::sin(ph));
        }
    }
    kernel_to_phys(K);
}

} // namespace

void linear_flow(HFBState& s, double dt) {
    // phi: e^{i t Lap} -> phase e^{-i |xi|^2 dt}
    to_fourier(s.phi);
    for (int i = 0; i < s.g.np; ++i) {
        double ph = -s.g.k2(i) * dt;
        s.phi[i] *= cplx(std::cos(ph), std::sin(ph));
    }
    to_phys(s.phi);
    // Lambda: e^{-i(|xi|^2+|eta|^2) dt}
    kernel_phase(s.lambda, s.g, -1.0, -1.0, dt);
    // Gamma: e^{+i(|xi|^2-|eta|^2) dt}
    kernel_phase(s.gamma, s.g, +1.0, -1.0, dt);
}

void potential_flow(HFBState& s, const Field& vN, double dt) {
    const Grid& g = s.g;
    const double c = dt / s.N;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < g.np; ++x) {
        auto cx = g.coords(x);
        for (int y = 0; y < g.np; ++y) {
            auto cy = g.coords(y);
            std::array<int, 3> dc{cx[0] - cy[0], cx[1] - cy[1], cx[2] - cy[2]};
            double ph = -c * vN[g.flat(dc)].real();
            s.lambda.at(x, y) *= cplx(std::cos(ph), std::sin(ph));
        }
    }
}

Deriv nonlinear_deriv(const HFBState& s, const Field& vN, RhsRoute route) {
    RhsOutput r = (route == RhsRoute::direct) ? rhs_direct(s, vN)
                                              : rhs_bracket(s, vN);
    Deriv d{Field(s.g), Kernel(s.g), Kernel(s.g)};
    const cplx iu(0.0, 1.0);
    for (int i = 0; i < s.g.np; ++i) d.dphi[i] = iu * r.dphi[i];
    d.dlambda = r.dlambda;
    kernel_scale(d.dlambda, iu);
    d.dgamma = kernel_conj(r.dgamma_bar);
    kernel_scale(d.dgamma, -iu);
    return d;
}

Deriv full_deriv(const HFBState& s, const Field& vN, RhsRoute route) {
    Deriv d = nonlinear_deriv(s, vN, route);
    const Grid& g = s.g;
    const cplx iu(0.0, 1.0);

    // dispersive parts, spectral
    Field ph = fourier_of(s.phi);
    for (int i = 0; i < g.np; ++i) ph[i] *= -g.k2(i) * iu;
    to_phys(ph);
    for (int i = 0; i < g.np; ++i) d.dphi[i] += ph[i];

    Kernel lam = s.lambda;
    kernel_to_fourier(lam);
    Kernel gam = s.gamma;
    kernel_to_fourier(gam);
    const int np = g.np;
    std::vector<double> k2(np);
    for (int i = 0; i < np; ++i) k2[i] = g.k2(i);
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) {
            lam.at(x, y) *= iu * (-k2[x] - k2[y]);
            gam.at(x, y) *= iu * (k2[x] - k2[y]);
        }
    kernel_to_phys(lam);
    kernel_to_phys(gam);
    kernel_axpy(d.dlambda, cplx(1.0), lam);
    kernel_axpy(d.dgamma, cplx(1.0), gam);

    // -(i/N) vN(x1-x2) Lambda
    Kernel pot = kernel_mul_difference(vN, s.lambda);
    kernel_axpy(d.dlambda, -iu / s.N, pot);
    return d;
}

namespace {

HFBState state_add(const HFBState& s, const Deriv& d, double c) {
    HFBState out = s;
    for (int i = 0; i < s.g.np; ++i) out.phi[i] += c * d.dphi[i];
    kernel_axpy(out.lambda, cplx(c), d.dlambda);
    kernel_axpy(out.gamma, cplx(c), d.dgamma);
    return out;
}

} // namespace

HFBState step_strang(const HFBState& s, const Field& vN, double dt,
                     RhsRoute route) {
    HFBState cur = s;
    linear_flow(cur, 0.5 * dt);
    potential_flow(cur, vN, 0.5 * dt);
    // explicit midpoint for the remaining nonlinear terms
    Deriv k1 = nonlinear_deriv(cur, vN, route);
    HFBState mid = state_add(cur, k1, 0.5 * dt);
    Deriv k2 = nonlinear_deriv(mid, vN, route);
    cur = state_add(cur, k2, dt);
    potential_flow(cur, vN, 0.5 * dt);
    linear_flow(cur, 0.5 * dt);
    return cur;
}

HFBState step_rk4(const HFBState& s, const Field& vN, double dt,
                  RhsRoute route) {
    Deriv k1 = full_deriv(s, vN, route);
    Deriv k2 = full_deriv(state_add(s, k1, 0.5 * dt), vN, route);
    Deriv k3 = full_deriv(state_add(s, k2, 0.5 * dt), vN, route);
    Deriv k4 = full_deriv(state_add(s, k3, dt), vN, route);
    HFBState out = s;
    double w = dt / 6.0;
    out = state_add(out, k1, w);
    out = state_add(out, k2, 2.0 * w);
    out = state_add(out, k3, 2.0 * w);
    out = state_add(out, k4, w);
    return out;
}

bool state_finite(const HFBState& s) {
    auto okc = [](const cplx& z) {
        return std::isfinite(z.real()) && std::isfinite(z.imag());
    };
    for (const auto& z : s.phi.a)
        if (!okc(z)) return false;
    for (const auto& z : s.lambda.a)
        if (!okc(z)) return false;
    for (const auto& z : s.gamma.a)
        if (!okc(z)) return false;
    return true;
}

double state_distance(const HFBState& a, const HFBState& b) {
    double s = 0.0;
    for (int i = 0; i < a.g.np; ++i) s += std::norm(a.phi[i] - b.phi[i]);
    double dphi = std::sqrt(s * a.g.cell);
    return std::max(dphi, std::max(kernel_hs_diff(a.lambda, b.lambda),
                                   kernel_hs_diff(a.gamma, b.gamma)));
}

EvolveResult evolve(
    const HFBState& s0, const Field& vN, double dt, int nsteps, Scheme scheme,
    RhsRoute route,
    const std::function<void(int, double, const HFBState&)>& observer) {
    EvolveResult res;
    res.state = s0;
    if (observer) observer(0, 0.0, res.state);
    for (int k = 1; k <= nsteps; ++k) {
        HFBState next = (scheme == Scheme::strang)
                            ? step_strang(res.state, vN, dt, route)
                            : step_rk4(res.state, vN, dt, route);
        if (!state_finite(next)) {
            // keep the last good state for the abort snapshot
            res.nan_abort = true;
            return res;
        }
        res.state = std::move(next);
        res.steps_done = k;
        if (observer) observer(k, k * dt, res.state);
    }
    return res;
}

} // namespace hfb
