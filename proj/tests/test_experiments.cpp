#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hfb/experiments.hpp"

using namespace hfb;

TEST_CASE("oracle suite passes, and at two sizes") {
    OracleLedger a = oracle_suite(4242, 16);
    CHECK(a.entries.size() >= 8);
    CHECK(a.all_pass());
    for (const auto& e : a.entries) {
        INFO(e.name);
        CHECK(e.residual < e.tol);
        CHECK(std::isfinite(e.residual));
    }
    // the same pairings hold on a coarser grid
    OracleLedger b = oracle_suite(99, 8);
    CHECK(b.all_pass());
    CHECK(b.entries.size() == a.entries.size());
    CHECK_FALSE(a.text().empty());
}

TEST_CASE("initial data: O(1) profiles for every N") {
    Grid g = Grid::make(1, 16, pi);
    InitRecipe ir;
    HFBState a = make_initial(g, 8, ir);
    HFBState b = make_initial(g, 512, ir);
    // mass is normalized to 1 and the condensate part is N-independent
    CHECK(particle_number(a) == doctest::Approx(1.0));
    CHECK(particle_number(b) == doctest::Approx(1.0));
    CHECK(validate(a).finite);
    CHECK(validate(a).psd_min_eig > -1e-10);

    // an excitation too massive to fit under unit mass is rejected
    InitRecipe bad = ir;
    bad.exc_sigma = 50.0;
    CHECK_THROWS_AS(make_initial(g, 8, bad), std::runtime_error);

    Field f = gauss_bump(g, 0.18);
    for (int i = 0; i < g.np; ++i) CHECK(f[i].imag() == 0.0);
}

TEST_CASE("n_sweep on a tiny configuration") {
    SweepConfig cfg;
    cfg.g = Grid::make(1, 16, pi);
    cfg.pot.beta = 0.5;
    cfg.Nlist = {8, 16, 32};
    cfg.T = 0.02;
    cfg.dt = 2e-3;
    cfg.store_every = 2;
    SweepReport rep = n_sweep(cfg);
    REQUIRE(rep.entries.size() == 3);
    for (const auto& e : rep.entries) {
        INFO(e.error);
        CHECK_FALSE(e.failed);
        CHECK_FALSE(e.conserved.empty());
        // mass stays at the normalized value along each run
        for (const auto& c : e.conserved)
            CHECK(c.mass == doctest::Approx(1.0).epsilon(1e-8));
    }
    CHECK(rep.ratio("lambda.total") >= 1.0);
    CHECK(std::isfinite(rep.slope("lambda.total")));
    CHECK(rep.ratio("phi.total") >= 1.0);
    CHECK_THROWS_AS(rep.ratio("no.such.key"), std::runtime_error);
    std::string csv = rep.csv();
    CHECK(csv.substr(0, 20) == "N,window,name,value\n");
    CHECK(csv.find("T/4") != std::string::npos);

    // decreasing N list is rejected
    SweepConfig bad = cfg;
    bad.Nlist = {16, 8};
    CHECK_THROWS_AS(n_sweep(bad), std::invalid_argument);

    // an unresolved sweep point is recorded as failed, not thrown
    SweepConfig part = cfg;
    part.pot.beta = 0.8;
    part.Nlist = {8, 4096};
    SweepReport rp = n_sweep(part);
    REQUIRE(rp.entries.size() == 2);
    CHECK_FALSE(rp.entries[0].failed);
    CHECK(rp.entries[1].failed);
    CHECK(rp.entries[1].error.find("Nyquist") != std::string::npos);
}

TEST_CASE("mlogm quadrature and ratio spread") {
    // A = 0: the integral is 4 pi (M - arctan M) in closed form
    for (double M : {2.0, 10.0}) {
        double got = mlogm_integral(M, 0.0);
        double want = 4.0 * pi * (M - std::atan(M));
        CHECK(got == doctest::Approx(want).epsilon(1e-8));
    }
    // continuity across the interior kink of |A + rho^2|
    double lo = mlogm_integral(4.0, -9.0 + 1e-9);
    double hi = mlogm_integral(4.0, -9.0 - 1e-9);
    CHECK(lo == doctest::Approx(hi).epsilon(1e-6));

    // the A ladder tracks -M^2/2 so the sup over A is comparable at every M;
    // a fixed handful of unrelated A values makes the small-M suprema
    // spuriously large and the spread meaningless
    LemmaCheck c = verify_mlogm({2, 4, 8, 16, 32, 64},
                                {0.0, -1.0, -2.0, -8.0, -32.0, -128.0, -512.0,
                                 -2048.0});
    CHECK(c.finite());
    CHECK(c.level_max.size() == 6);
    double spread = 0.0;
    for (const auto& [k, v] : c.extra)
        if (k == "spread") spread = v;
    CHECK(spread > 1.0);
    CHECK(spread < 2.0);
    CHECK_FALSE(c.csv().empty());
    CHECK(c.json().find("mlogm") != std::string::npos);

    CHECK_THROWS_AS(verify_mlogm({1.0}, {0.0}), std::invalid_argument);
}

TEST_CASE("duhamel verifier: guard and small ensemble") {
    CHECK_THROWS_AS(verify_duhamel(1.0, 1, 7), std::invalid_argument);
    CHECK_THROWS_AS(verify_duhamel(-0.2, 1, 7), std::invalid_argument);
    LemmaCheck c = verify_duhamel(0.45, 3, 7, {16, 32});
    CHECK(c.finite());
    CHECK(c.max_ratio > 0.0);
    CHECK(c.level_param.size() == 2);
    CHECK(c.ratios.size() == 3);
}

TEST_CASE("strichartz verifier: admissibility and trivial exponents") {
    // the printed relation fixes q given (delta, p)
    CHECK(strichartz_admissible_q(0.4, 2.0) ==
          doctest::Approx(3.0 / ((5.0 - 1.6) / 2.0 - 1.0)));
    // inadmissible exponents are rejected with the admissible q named
    try {
        verify_strichartz(0.4, 2.0, 2.0, 1, 5);
        CHECK(false);
    } catch (const std::invalid_argument& ex) {
        std::string msg = ex.what();
        CHECK(msg.find("admissible q") != std::string::npos);
    }
    // delta = 0, p = q = 2 satisfies 2/p + 3/q = 5/2 and both sides collapse
    // to the same space-time L^2 content: every ratio is 1
    LemmaCheck c = verify_strichartz(0.0, 2.0, 2.0, 2, 5, {12, 16});
    CHECK(c.finite());
    for (double r : c.ratios) CHECK(r == doctest::Approx(1.0).epsilon(1e-10));

    // the acceptance exponents at a small size stay finite and order one
    double q = strichartz_admissible_q(0.4, 2.0);
    LemmaCheck c2 = verify_strichartz(0.4, 2.0, q, 2, 5, {12, 16});
    CHECK(c2.finite());
    CHECK(c2.max_ratio > 0.0);
}

TEST_CASE("sobolev-at-an-angle verifier: alpha = 0 is an identity") {
    LemmaCheck c = verify_sobolev_angle(3, 11, 0.0, 2.0, {12, 16});
    CHECK(c.finite());
    for (double r : c.ratios) CHECK(r == doctest::Approx(1.0).epsilon(1e-10));

    // 1/q must stay positive
    CHECK_THROWS_AS(verify_sobolev_angle(1, 11, 7.0, 2.0, {12}),
                    std::invalid_argument);

    LemmaCheck c2 = verify_sobolev_angle(2, 11, 1.0, 2.0, {12, 16});
    CHECK(c2.finite());
    CHECK(c2.max_ratio > 0.0);
}

TEST_CASE("quarter-time verifier: small ensemble is finite") {
    LemmaCheck c = verify_quartertime(2, 21, 0.75, 0.1, {12, 16});
    CHECK(c.finite());
    CHECK(c.max_ratio > 0.0);
    CHECK(c.level_param.size() == 2);
}
