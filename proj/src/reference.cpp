#include "hfb/reference.hpp"

#include <cmath>

namespace hfb {
namespace ref {

namespace {

inline double vdiff(const Field& v, const Grid& g, int x, int y) {
    auto cx = g.coords(x);
    auto cy = g.coords(y);
    std::array<int, 3> dc{cx[0] - cy[0], cx[1] - cy[1], cx[2] - cy[2]};
    return v[g.flat(dc)].real();
}

} // namespace

Kernel compose(const Kernel& A, const Kernel& B) {
    const Grid& g = A.g;
    Kernel C(g);
    for (int x = 0; x < g.np; ++x)
        for (int y = 0; y < g.np; ++y) {
            cplx s = 0.0;
            for (int z = 0; z < g.np; ++z) s += A.at(x, z) * B.at(z, y);
            C.at(x, y) = s * g.cell;
        }
    return C;
}

Field conv_diag(const Field& vN, const Kernel& K) {
    const Grid& g = K.g;
    Field out(g);
    for (int x = 0; x < g.np; ++x) {
        cplx s = 0.0;
        for (int y = 0; y < g.np; ++y) s += vdiff(vN, g, x, y) * K.at(y, y);
        out[x] = s * g.cell;
    }
    return out;
}

RhsOutput rhs(const HFBState& st, const Field& vN) {
    const Grid& g = st.g;
    RhsOutput r{Field(g), Kernel(g), Kernel(g)};

    for (int x1 = 0; x1 < g.np; ++x1) {
        cplx acc = 0.0;
        for (int y = 0; y < g.np; ++y) {
            double v = vdiff(vN, g, x1, y);
            acc -= v * st.gamma.at(y, y) * st.phi[x1];
            acc -= v * st.phi[y] *
                   (st.gamma.at(y, x1) - std::conj(st.phi[y]) * st.phi[x1]);
            acc -= v * std::conj(st.phi[y]) *
                   (st.lambda.at(x1, y) - st.phi[x1] * st.phi[y]);
        }
        r.dphi[x1] = acc * g.cell;
    }

    for (int x1 = 0; x1 < g.np; ++x1)
        for (int x2 = 0; x2 < g.np; ++x2) {
            cplx accL = 0.0, accG = 0.0;
            for (int y = 0; y < g.np; ++y) {
                double v1 = vdiff(vN, g, x1, y);
                double v2 = vdiff(vN, g, x2, y);
                double ph2 = std::norm(st.phi[y]);
                cplx gyy = st.gamma.at(y, y);

                accL -= (v1 + v2) * gyy * st.lambda.at(x1, x2);
                accL -= (v1 + v2) *
                        (st.lambda.at(x1, y) * st.gamma.at(y, x2) +
                         std::conj(st.gamma.at(x1, y)) * st.lambda.at(y, x2));
                accL += 2.0 * (v1 + v2) * ph2 * st.phi[x1] * st.phi[x2];

                accG -= (v1 - v2) *
                        (st.lambda.at(x1, y) * std::conj(st.lambda.at(y, x2)));
                accG -= (v1 - v2) *
                        (std::conj(st.gamma.at(x1, y)) *
                             std::conj(st.gamma.at(y, x2)) +
                         std::conj(gyy) * std::conj(st.gamma.at(x1, x2)));
                accG += 2.0 * (v1 - v2) * ph2 * st.phi[x1] *
                        std::conj(st.phi[x2]);
            }
            r.dlambda.at(x1, x2) = accL * g.cell;
            r.dgamma_bar.at(x1, x2) = accG * g.cell;
        }
    return r;
}

FermiRhs fermi_rhs_nonlinear(const FermiState& st, const Field& v) {
    const Grid& g = st.g;
    FermiRhs r{Kernel(g), Kernel(g)};
    const cplx mi(0.0, -1.0), pi_(0.0, 1.0);

    for (int x1 = 0; x1 < g.np; ++x1)
        for (int x2 = 0; x2 < g.np; ++x2) {
            cplx accP = -2.0 * vdiff(v, g, x1, x2) * st.psi.at(x1, x2);
            cplx accO = 0.0;
            cplx sumA = 0.0, sumB = 0.0, sumC = 0.0, sumD = 0.0;
            for (int y = 0; y < g.np; ++y) {
                double v1 = vdiff(v, g, x1, y);
                double v2 = vdiff(v, g, y, x2);
                cplx oyy = st.omega.at(y, y);
                // bars on the second factor of each pairing product (sumA and
                // sumC): the arrangement that keeps psi antisymmetric, omega
                // hermitian, and the constraint transported along the flow
                sumA += v1 * (st.omega.at(x1, y) * st.psi.at(y, x2) +
                              st.psi.at(x1, y) * std::conj(st.omega.at(y, x2)) -
                              oyy * st.psi.at(x1, x2));
                sumB += v2 * (st.psi.at(x1, y) * std::conj(st.omega.at(y, x2)) +
                              st.omega.at(x1, y) * st.psi.at(y, x2) -
                              oyy * st.psi.at(x1, x2));
                sumC += v1 * (st.psi.at(x1, y) * std::conj(st.psi.at(y, x2)) +
                              st.omega.at(x1, y) * st.omega.at(y, x2) -
                              oyy * st.omega.at(x1, x2));
                sumD += v2 * (st.psi.at(x1, y) * std::conj(st.psi.at(y, x2)) +
                              st.omega.at(x1, y) * st.omega.at(y, x2) -
                              oyy * st.omega.at(x1, x2));
            }
            accP += (sumA + sumB) * g.cell;
            accO += (-sumC + sumD) * g.cell;
            r.dpsi.at(x1, x2) = mi * accP;
            r.domega.at(x1, x2) = pi_ * accO;
        }
    return r;
}

} // namespace ref
} // namespace hfb
