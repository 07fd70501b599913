#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hfb/potential.hpp"

using namespace hfb;

TEST_CASE("sampled vN is real, even, with N-independent mass") {
    Grid g = Grid::make(1, 64, pi);
    for (double N : {1.0, 8.0, 64.0}) {
        PotentialSpec p;
        p.beta = 0.7;
        p.N = N;
        REQUIRE(resolved(g, p));
        Field v = sample_vN(g, p);
        for (int i = 0; i < g.np; ++i) {
            CHECK(v[i].imag() == 0.0);
            int mi = (g.np - i) % g.np; // v(-x) = v(x)
            CHECK(v[i].real() == doctest::Approx(v[mi].real()).epsilon(1e-12));
        }
        double mass = 0;
        for (int i = 0; i < g.np; ++i) mass += v[i].real();
        mass *= g.cell;
        // int vN = vhat(0) = 1/e for the bump profile, for every N
        CHECK(mass == doctest::Approx(vN_mass(p)).epsilon(1e-12));
        CHECK(vN_mass(p) == doctest::Approx(std::exp(-1.0)));
    }
}

TEST_CASE("amplitude scales linearly") {
    PotentialSpec p;
    p.amplitude = 2.5;
    CHECK(vN_mass(p) == doctest::Approx(2.5 * std::exp(-1.0)));
    Grid g = Grid::make(1, 32, pi);
    Field v1 = sample_vN(g, p);
    p.amplitude = 1.0;
    Field v0 = sample_vN(g, p);
    for (int i = 0; i < g.np; ++i)
        CHECK(v1[i].real() == doctest::Approx(2.5 * v0[i].real()));
}

TEST_CASE("resolved-regime boundary") {
    Grid g = Grid::make(1, 32, pi); // nyquist = 32
    PotentialSpec p;
    p.beta = 0.8;
    p.N = 64; // 64^0.8 ~ 27.9
    CHECK(resolved(g, p));
    p.N = 128; // 128^0.8 ~ 48.5 > 32
    CHECK_FALSE(resolved(g, p));
    // exactly at the boundary counts as resolved
    p.beta = 1.0;
    p.N = 32.0;
    CHECK(resolved(g, p));
}

TEST_CASE("profile support and hypothesis checks") {
    CHECK(vhat_profile("bump", 0.0) == doctest::Approx(std::exp(-1.0)));
    CHECK(vhat_profile("bump", 1.0) == 0.0);
    CHECK(vhat_profile("bump", 2.3) == 0.0);
    CHECK(vhat_profile("cos2", 0.0) == doctest::Approx(1.0));
    CHECK(vhat_profile("cos2", 1.0) == 0.0);
    CHECK_THROWS_AS(vhat_profile("box", 0.5), std::invalid_argument);

    PotentialSpec v;                      // bump, amplitude 1
    PotentialSpec w;                      // cos2 dominates bump pointwise
    w.profile = "cos2";
    auto rep = check_hypotheses(v, w);
    CHECK(rep.support_ok);
    CHECK(rep.majorant_ok);
    CHECK(rep.beta_ok);
    CHECK(rep.ok());

    // a majorant that is too small fails
    w.amplitude = 0.1;
    CHECK_FALSE(check_hypotheses(v, w).majorant_ok);

    // beta >= 1 fails the scaling hypothesis
    v.beta = 1.0;
    w.amplitude = 1.0;
    auto rep2 = check_hypotheses(v, w);
    CHECK_FALSE(rep2.beta_ok);
    CHECK_FALSE(rep2.ok());
}

TEST_CASE("field_lp on a known profile") {
    Grid g = Grid::make(1, 16, 2.0);
    Field f(g);
    for (int i = 0; i < g.np; ++i) f[i] = cplx(3.0, 4.0); // |f| = 5
    CHECK(field_lp(f, 2.0) == doctest::Approx(5.0 * std::sqrt(g.vol)));
    CHECK(field_lp(f, 4.0) == doctest::Approx(5.0 * std::pow(g.vol, 0.25)));
}

TEST_CASE("radial d=3 transform: mass recovered") {
    // int v = 4 pi int r^2 v(r) dr should equal vhat(0) for the unscaled
    // profile (continuum check of the quadrature, N = 1)
    const int m = 1200;
    double rmax = 40.0, h = rmax / m;
    double acc = 0.0;
    for (int i = 1; i <= m; ++i) {
        double r = h * i;
        acc += 4.0 * pi * r * r * v_radial3("bump", 1.0, r) * h;
    }
    CHECK(acc == doctest::Approx(std::exp(-1.0)).epsilon(5e-3));
}

TEST_CASE("L^{3/2} scaling of vN") {
    // ||v_N||_{3/2} = N^beta ||v||_{3/2} exactly under the dilation, so the
    // quadrature should reproduce the N^beta ratio and (1/N)||v_N||_{3/2}
    // should decay like N^{beta - 1}
    PotentialSpec p;
    p.beta = 0.8;
    p.N = 8;
    double a = vN_l32_radial(p);
    p.N = 32;
    double b = vN_l32_radial(p);
    double want = std::pow(32.0 / 8.0, 0.8);
    CHECK(b / a == doctest::Approx(want).epsilon(2e-3));
    CHECK((b / 32.0) / (a / 8.0) ==
          doctest::Approx(std::pow(4.0, 0.8 - 1.0)).epsilon(2e-3));
}
