#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hfb/integrator.hpp"
#include "hfb/potential.hpp"
#include "hfb/reference.hpp"

using namespace hfb;

namespace {

HFBState tagged_random(const Grid& g, double N, Rng& rng, double scale) {
    return random_state(g, N, rng, scale);
}

} // namespace

TEST_CASE("direct, bracket, and reference assemblies agree on an ensemble") {
    Grid g = Grid::make(1, 16, pi);
    PotentialSpec ps;
    ps.beta = 0.5;
    ps.N = 16;
    Field vN = sample_vN(g, ps);
    double worst_db = 0, worst_dr = 0;
    for (int trial = 0; trial < 50; ++trial) {
        Rng rng(1000 + trial);
        HFBState s = tagged_random(g, 16.0, rng, 0.5);
        RhsOutput d = rhs_direct(s, vN);
        RhsOutput b = rhs_bracket(s, vN);
        RhsOutput r = ref::rhs(s, vN);
        worst_db = std::max(worst_db, rhs_distance(d, b));
        worst_dr = std::max(worst_dr, rhs_distance(d, r));
    }
    // relative to O(1) outputs; the acceptance gate uses the same bound
    CHECK(worst_db < 1e-11);
    CHECK(worst_dr < 1e-11);
}

TEST_CASE("zero state, zero potential") {
    Grid g = Grid::make(1, 16, pi);
    PotentialSpec ps;
    ps.N = 16;
    Field vN = sample_vN(g, ps);
    HFBState z(g, 16.0);
    RhsOutput r = rhs_direct(z, vN);
    CHECK(kernel_max_abs(r.dlambda) == 0.0);
    CHECK(kernel_max_abs(r.dgamma_bar) == 0.0);
    for (int i = 0; i < g.np; ++i) CHECK(std::abs(r.dphi[i]) == 0.0);

    Rng rng(2);
    HFBState s = tagged_random(g, 16.0, rng, 0.5);
    Field v0(g); // vN = 0 kills every interaction term
    RhsOutput r0 = rhs_direct(s, v0);
    CHECK(kernel_max_abs(r0.dlambda) < 1e-14);
    CHECK(kernel_max_abs(r0.dgamma_bar) < 1e-14);
}

TEST_CASE("equivalence needs the symmetry tags") {
    // the bracket form uses transposes/adjoints that are only equal to the
    // direct integrals when Lambda^T = Lambda and Gamma* = Gamma; a state
    // with a corrupted tag must be caught by the comparison
    Grid g = Grid::make(1, 16, pi);
    PotentialSpec ps;
    ps.beta = 0.5;
    ps.N = 16;
    Field vN = sample_vN(g, ps);
    Rng rng(77);
    HFBState s = tagged_random(g, 16.0, rng, 0.5);
    s.lambda.at(2, 9) += cplx(0.3, -0.2); // now Lambda^T != Lambda
    RhsOutput d = rhs_direct(s, vN);
    RhsOutput b = rhs_bracket(s, vN);
    CHECK(rhs_distance(d, b) > 1e-6);
}

TEST_CASE("outputs preserve the symmetry tags") {
    Grid g = Grid::make(1, 16, pi);
    PotentialSpec ps;
    ps.beta = 0.5;
    ps.N = 16;
    Field vN = sample_vN(g, ps);
    Rng rng(5);
    HFBState s = tagged_random(g, 16.0, rng, 0.5);
    for (RhsRoute route : {RhsRoute::direct, RhsRoute::bracket}) {
        Deriv d = full_deriv(s, vN, route);
        CHECK(defect_symmetric(d.dlambda) < 1e-10);
        CHECK(defect_hermitian(d.dgamma) < 1e-10);
    }
}

TEST_CASE("convolutions against the reference") {
    Grid g = Grid::make(1, 16, 2.0);
    PotentialSpec ps;
    ps.beta = 0.4;
    ps.N = 8;
    Field vN = sample_vN(g, ps);
    Rng rng(13);
    Kernel K(g);
    for (auto& z : K.a) z = rng.cnormal();
    Field a = conv_diag(vN, K);
    Field b = ref::conv_diag(vN, K);
    for (int i = 0; i < g.np; ++i) CHECK(std::abs(a[i] - b[i]) < 1e-12);

    // conv_field against a direct periodic sum
    Field f(g);
    for (int i = 0; i < g.np; ++i) f[i] = rng.cnormal();
    Field c = conv_field(vN, f);
    for (int x = 0; x < g.np; ++x) {
        cplx acc = 0;
        for (int y = 0; y < g.np; ++y)
            acc += vN[(x - y + g.np) % g.np] * f[y];
        acc *= g.cell;
        CHECK(std::abs(c[x] - acc) < 1e-12);
    }
}

TEST_CASE("bracket primitives on explicit kernels") {
    Grid g = Grid::make(1, 8, 1.0);
    Rng rng(1);
    Kernel A(g), B(g);
    for (auto& z : A.a) z = rng.cnormal();
    for (auto& z : B.a) z = rng.cnormal();

    Kernel comm = bracket_comm(A, B); // A o B - B* o A*
    Kernel want = kernel_compose(A, B);
    kernel_axpy(want, cplx(-1.0),
                kernel_compose(kernel_adjoint(B), kernel_adjoint(A)));
    CHECK(kernel_hs_diff(comm, want) < 1e-12);

    Kernel anti = bracket_anti(A, B); // A o B + B^T o A^T
    want = kernel_compose(A, B);
    kernel_axpy(want, cplx(1.0),
                kernel_compose(kernel_transpose(B), kernel_transpose(A)));
    CHECK(kernel_hs_diff(anti, want) < 1e-12);

    // multiplication-operator variants against dense multiplication kernels
    Field q(g);
    for (int i = 0; i < g.np; ++i) q[i] = rng.normal(); // real, like vN*diag
    Kernel qd = delta_kernel(g);
    qd = kernel_mul_left(q, qd);
    CHECK(kernel_hs_diff(bracket_comm_mult(q, B), bracket_comm(qd, B)) < 1e-9);
    CHECK(kernel_hs_diff(bracket_anti_mult(q, B), bracket_anti(qd, B)) < 1e-9);
}
