#include "hfb/rhs.hpp"

#include <cmath>

#include "hfb/fft.hpp"

namespace hfb {

Field conv_diag(const Field& vN, const Kernel& K) {
    Field d = kernel_diag(K);
    return conv_field(vN, d);
}

Field conv_field(const Field& vN, const Field& f) {
    Field vhat = fourier_of(vN);
    Field out = fourier_of(f);
    for (int i = 0; i < out.g.np; ++i) out[i] *= vhat[i];
    to_phys(out);
    return out;
}

Kernel bracket_comm(const Kernel& A, const Kernel& B) {
    Kernel out = kernel_compose(A, B);
    Kernel t = kernel_compose(kernel_adjoint(B), kernel_adjoint(A));
    kernel_axpy(out, cplx(-1.0), t);
    return out;
}

Kernel bracket_anti(const Kernel& A, const Kernel& B) {
    Kernel out = kernel_compose(A, B);
    Kernel t = kernel_compose(kernel_transpose(B), kernel_transpose(A));
    kernel_axpy(out, cplx(1.0), t);
    return out;
}

Kernel bracket_comm_mult(const Field& g, const Kernel& B) {
    // [g delta, B] = g(x1) B - B*(.,x2) g(x2) with B* the adjoint (g real)
    Kernel out = kernel_mul_left(g, B);
    kernel_axpy(out, cplx(-1.0), kernel_mul_right(kernel_adjoint(B), g));
    return out;
}

Kernel bracket_anti_mult(const Field& g, const Kernel& B) {
    // {g delta, B} = g(x1) B + B^T(.,x2) g(x2)
    Kernel out = kernel_mul_left(g, B);
    kernel_axpy(out, cplx(1.0), kernel_mul_right(kernel_transpose(B), g));
    return out;
}

namespace {

Field conj_field(const Field& f) {
    Field out = f;
    for (auto& z : out.a) z = std::conj(z);
    return out;
}

Field abs2_field(const Field& f) {
    Field out = f;
    for (auto& z : out.a) z = std::norm(z);
    return out;
}

// out(x1,x2) = (a(x1) +/- a(x2)) K(x1,x2)
Kernel sum_mult(const Field& a, const Kernel& K, double sgn) {
    Kernel out = kernel_mul_left(a, K);
    kernel_axpy(out, cplx(sgn), kernel_mul_right(K, a));
    return out;
}

} // namespace

RhsOutput rhs_direct(const HFBState& s, const Field& vN) {
    const Grid& g = s.g;
    RhsOutput r{Field(g), Kernel(g), Kernel(g)};

    Field q = conv_diag(vN, s.gamma);        // vN * diag Gamma (real)
    Field h = conv_field(vN, abs2_field(s.phi)); // vN * |phi|^2
    Field phibar = conj_field(s.phi);
    Kernel gammabar = kernel_conj(s.gamma);
    Kernel lambdabar = kernel_conj(s.lambda);

    // phi equation:
    //   R_phi = -(vN*diagGamma) phi
    //           - int vN(x1-y) [ phi(y)(Gamma(y,x1) - conj(phi)(y)phi(x1))
    //                           + conj(phi)(y)(Lambda(x1,y) - phi(x1)phi(y)) ]
    // The subtracted condensate pieces add up to +2 (vN*|phi|^2) phi.
    {
        Field t2 = kernel_apply(kernel_mul_difference(vN, kernel_transpose(s.gamma)),
                                s.phi);               // int vN(x1-y) Gamma(y,x1) phi(y)
        Field t3 = kernel_apply(kernel_mul_difference(vN, s.lambda), phibar);
        for (int i = 0; i < g.np; ++i)
            r.dphi[i] = -q[i] * s.phi[i] - t2[i] - t3[i] +
                        2.0 * h[i] * s.phi[i];
    }

    // Lambda equation, term by term
    {
        Kernel VL = kernel_mul_difference(vN, s.lambda);
        Kernel VG = kernel_mul_difference(vN, s.gamma);
        Kernel VGb = kernel_mul_difference(vN, gammabar);

        Kernel acc = sum_mult(q, s.lambda, +1.0);   // (q(x1)+q(x2)) Lambda
        kernel_axpy(acc, cplx(1.0), kernel_compose(VL, s.gamma));
        kernel_axpy(acc, cplx(1.0), kernel_compose(s.lambda, VG));
        kernel_axpy(acc, cplx(1.0), kernel_compose(VGb, s.lambda));
        kernel_axpy(acc, cplx(1.0), kernel_compose(gammabar, VL));
        kernel_scale(acc, cplx(-1.0));

        Kernel src = sum_mult(h, kernel_outer(s.phi, s.phi), +1.0);
        kernel_axpy(acc, cplx(2.0), src);
        r.dlambda = acc;
    }

    // conj(Gamma) equation, term by term
    {
        Kernel VL = kernel_mul_difference(vN, s.lambda);
        Kernel VLb = kernel_mul_difference(vN, lambdabar);
        Kernel VGb = kernel_mul_difference(vN, gammabar);

        Kernel acc = kernel_compose(VL, lambdabar);
        kernel_axpy(acc, cplx(-1.0), kernel_compose(s.lambda, VLb));
        kernel_axpy(acc, cplx(1.0), kernel_compose(VGb, gammabar));
        kernel_axpy(acc, cplx(-1.0), kernel_compose(gammabar, VGb));
        kernel_axpy(acc, cplx(1.0), sum_mult(q, gammabar, -1.0));
        kernel_scale(acc, cplx(-1.0));

        Kernel src = sum_mult(h, kernel_outer(s.phi, phibar), -1.0);
        kernel_axpy(acc, cplx(2.0), src);
        r.dgamma_bar = acc;
    }
    return r;
}

RhsOutput rhs_bracket(const HFBState& s, const Field& vN) {
    const Grid& g = s.g;
    RhsOutput r{Field(g), Kernel(g), Kernel(g)};

    Field q = conv_diag(vN, s.gamma);
    Field h = conv_field(vN, abs2_field(s.phi));
    Field phibar = conj_field(s.phi);
    Kernel gammabar = kernel_conj(s.gamma);
    Kernel lambdabar = kernel_conj(s.lambda);

    // phi: same content phrased as operator applications
    {
        Field t2 = kernel_apply(kernel_mul_difference(vN, kernel_transpose(s.gamma)),
                                s.phi);
        Field t3 = kernel_apply(kernel_mul_difference(vN, s.lambda), phibar);
        for (int i = 0; i < g.np; ++i)
            r.dphi[i] = -q[i] * s.phi[i] - t2[i] - t3[i] +
                        2.0 * h[i] * s.phi[i];
    }

    // R_Lambda = -{vN*diag(conj Gamma), Lambda} - {vN conj(Gamma), Lambda}
    //            - {vN Lambda, Gamma} + {vN phi conj(phi), phi phi}
    //            + {vN phi phi, conj(phi) phi}
    {
        Kernel acc = bracket_anti_mult(q, s.lambda);
        kernel_axpy(acc, cplx(1.0),
                    bracket_anti(kernel_mul_difference(vN, gammabar), s.lambda));
        kernel_axpy(acc, cplx(1.0),
                    bracket_anti(kernel_mul_difference(vN, s.lambda), s.gamma));
        kernel_scale(acc, cplx(-1.0));
        kernel_axpy(acc, cplx(1.0),
                    bracket_anti(kernel_mul_difference(vN, kernel_outer(s.phi, phibar)),
                                 kernel_outer(s.phi, s.phi)));
        kernel_axpy(acc, cplx(1.0),
                    bracket_anti(kernel_mul_difference(vN, kernel_outer(s.phi, s.phi)),
                                 kernel_outer(phibar, s.phi)));
        r.dlambda = acc;
    }

    // Gamma (not conj):  Wop Gamma + [vN*diagGamma,Gamma] + [vN conj(Lambda),Lambda]
    //   + [vN Gamma,Gamma] = [vN conj(phi phi), phi phi] + [vN conj(phi) phi, conj(phi) phi]
    // then dgamma_bar = conj(R')
    {
        Kernel acc = bracket_comm_mult(q, s.gamma);
        kernel_axpy(acc, cplx(1.0),
                    bracket_comm(kernel_mul_difference(vN, lambdabar), s.lambda));
        kernel_axpy(acc, cplx(1.0),
                    bracket_comm(kernel_mul_difference(vN, s.gamma), s.gamma));
        kernel_scale(acc, cplx(-1.0));
        kernel_axpy(acc, cplx(1.0),
                    bracket_comm(kernel_mul_difference(vN, kernel_outer(phibar, phibar)),
                                 kernel_outer(s.phi, s.phi)));
        kernel_axpy(acc, cplx(1.0),
                    bracket_comm(kernel_mul_difference(vN, kernel_outer(phibar, s.phi)),
                                 kernel_outer(phibar, s.phi)));
        r.dgamma_bar = kernel_conj(acc);
    }
    return r;
}

double rhs_distance(const RhsOutput& a, const RhsOutput& b) {
    double s = 0.0;
    for (int i = 0; i < a.dphi.g.np; ++i) s += std::norm(a.dphi[i] - b.dphi[i]);
    double dphi = std::sqrt(s * a.dphi.g.cell);
    double dl = kernel_hs_diff(a.dlambda, b.dlambda);
    double dg = kernel_hs_diff(a.dgamma_bar, b.dgamma_bar);
    return std::max(dphi, std::max(dl, dg));
}

} // namespace hfb
