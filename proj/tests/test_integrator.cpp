#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hfb/experiments.hpp"
#include "hfb/fft.hpp"
#include "hfb/integrator.hpp"

using namespace hfb;

namespace {

// periodized Gaussian e^{-a x^2} centered at L/2 and its free evolution
Field gauss_exact(const Grid& g, double a, double t) {
    Field f(g);
    cplx den = 1.0 + cplx(0.0, 4.0 * a * t);
    for (int i = 0; i < g.np; ++i) {
        double u = g.x1(i) - 0.5 * g.L;
        cplx acc = 0;
        for (int m = -10; m <= 10; ++m) {
            double um = u + m * g.L;
            acc += std::exp(-a * um * um / den);
        }
        f[i] = acc / std::sqrt(den);
    }
    return f;
}

} // namespace

TEST_CASE("free evolution of a Gaussian matches the closed form") {
    Grid g = Grid::make(1, 64, 2 * pi);
    const double a = 4.0, T = 0.1;
    HFBState s(g, 8.0);
    s.phi = gauss_exact(g, a, 0.0);
    Field vz(g); // zero potential: the flow is linear

    HFBState y = s;
    const int ns = 100;
    for (int k = 0; k < ns; ++k) y = step_strang(y, vz, T / ns);
    Field want = gauss_exact(g, a, T);
    double err = 0;
    for (int i = 0; i < g.np; ++i)
        err = std::max(err, std::abs(y.phi[i] - want[i]));
    // Strang's linear sub-flow is the exact Fourier phase
    CHECK(err < 1e-10);

    // one exact linear_flow call over the full window does the same
    HFBState z = s;
    linear_flow(z, T);
    err = 0;
    for (int i = 0; i < g.np; ++i)
        err = std::max(err, std::abs(z.phi[i] - want[i]));
    CHECK(err < 1e-12);

    // rk4 time-discretizes the Laplacian, so it converges at order 4 instead
    HFBState r = s;
    for (int k = 0; k < ns; ++k) r = step_rk4(r, vz, T / ns);
    err = 0;
    for (int i = 0; i < g.np; ++i)
        err = std::max(err, std::abs(r.phi[i] - want[i]));
    CHECK(err < 1e-6);
    CHECK(err > 1e-12);
}

TEST_CASE("kernel components ride the same free flow") {
    Grid g = Grid::make(1, 32, pi);
    Rng rng(6);
    Field f(g), h(g);
    for (int i = 0; i < g.np; ++i) { f[i] = rng.cnormal(); h[i] = rng.cnormal(); }
    HFBState s(g, 4.0);
    s.lambda = kernel_outer(f, f);
    s.gamma = kernel_outer(h, f);
    const double t = 0.07;
    linear_flow(s, t);
    // Lambda(x,y) evolves by e^{-i(|xi|^2+|eta|^2)t}: both slots forward
    Field ff = f;
    to_fourier(ff);
    for (int i = 0; i < g.np; ++i) ff[i] *= std::exp(cplx(0, -g.k2(i) * t));
    to_phys(ff);
    CHECK(kernel_hs_diff(s.lambda, kernel_outer(ff, ff)) < 1e-11);
    // Gamma's first slot runs backward (the conjugate direction)
    Field hb = h;
    to_fourier(hb);
    for (int i = 0; i < g.np; ++i) hb[i] *= std::exp(cplx(0, +g.k2(i) * t));
    to_phys(hb);
    CHECK(kernel_hs_diff(s.gamma, kernel_outer(hb, ff)) < 1e-11);
}

TEST_CASE("potential_flow is the pointwise vN phase") {
    Grid g = Grid::make(1, 16, pi);
    PotentialSpec ps;
    ps.beta = 0.5;
    ps.N = 16;
    Field vN = sample_vN(g, ps);
    Rng rng(8);
    HFBState s = random_state(g, 16.0, rng, 0.5);
    HFBState before = s;
    const double dt = 0.3;
    potential_flow(s, vN, dt);
    for (int x = 0; x < g.np; ++x)
        for (int y = 0; y < g.np; ++y) {
            cplx ph = std::exp(
                cplx(0, -dt / s.N * vN[(x - y + g.np) % g.np].real()));
            CHECK(std::abs(s.lambda.at(x, y) - ph * before.lambda.at(x, y)) <
                  1e-14);
            // phi and Gamma are untouched by this sub-flow
            CHECK(s.gamma.at(x, y) == before.gamma.at(x, y));
        }
}

TEST_CASE("self-convergence orders") {
    Grid g = Grid::make(1, 16, pi);
    PotentialSpec ps;
    ps.beta = 0.5;
    ps.N = 16;
    Field vN = sample_vN(g, ps);
    InitRecipe ir;
    HFBState s0 = make_initial(g, 16, ir);
    auto run = [&](Scheme sch, double dt) {
        HFBState x = s0;
        int ns = (int)std::lround(0.048 / dt);
        for (int k = 0; k < ns; ++k)
            x = (sch == Scheme::strang) ? step_strang(x, vN, dt)
                                        : step_rk4(x, vN, dt);
        return x;
    };
    {
        double d1 = state_distance(run(Scheme::strang, 4e-3), run(Scheme::strang, 2e-3));
        double d2 = state_distance(run(Scheme::strang, 2e-3), run(Scheme::strang, 1e-3));
        CHECK(std::log2(d1 / d2) > 1.9);
    }
    {
        double d1 = state_distance(run(Scheme::rk4, 4e-3), run(Scheme::rk4, 2e-3));
        double d2 = state_distance(run(Scheme::rk4, 2e-3), run(Scheme::rk4, 1e-3));
        CHECK(std::log2(d1 / d2) > 3.8);
    }
}

TEST_CASE("routes produce the same step") {
    Grid g = Grid::make(1, 16, pi);
    PotentialSpec ps;
    ps.beta = 0.5;
    ps.N = 16;
    Field vN = sample_vN(g, ps);
    InitRecipe ir;
    HFBState s = make_initial(g, 16, ir);
    HFBState a = step_strang(s, vN, 1e-3, RhsRoute::direct);
    HFBState b = step_strang(s, vN, 1e-3, RhsRoute::bracket);
    CHECK(state_distance(a, b) < 1e-13);
    a = step_rk4(s, vN, 1e-3, RhsRoute::direct);
    b = step_rk4(s, vN, 1e-3, RhsRoute::bracket);
    CHECK(state_distance(a, b) < 1e-13);
}

TEST_CASE("evolve aborts on blow-up and keeps the last good state") {
    Grid g = Grid::make(1, 32, pi);
    PotentialSpec ps;
    ps.beta = 0.8;
    ps.N = 64;
    Field vN = sample_vN(g, ps);
    InitRecipe ir;
    HFBState s0 = make_initial(g, 64, ir);
    // dt * max|k|^2 ~ 200: rk4's stability region is left far behind
    EvolveResult res = evolve(s0, vN, 0.1, 50, Scheme::rk4);
    CHECK(res.nan_abort);
    CHECK(res.steps_done < 50);
    CHECK(state_finite(res.state));

    // the observer sees step 0 and each completed step
    int calls = 0;
    evolve(s0, vN, 1e-3, 5, Scheme::strang, RhsRoute::direct,
           [&](int, double, const HFBState&) { ++calls; });
    CHECK(calls == 6);
}
