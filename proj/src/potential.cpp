#include "hfb/potential.hpp"

#include <cmath>
#include <stdexcept>

#include "hfb/fft.hpp"

namespace hfb {

double vhat_profile(const std::string& profile, double r) {
    r = std::fabs(r);
    if (r >= 1.0) return 0.0;
    if (profile == "bump") return std::exp(-1.0 / (1.0 - r * r));
    if (profile == "cos2") {
        double c = std::cos(0.5 * pi * r);
        return c * c;
    }
    throw std::invalid_argument("unknown potential profile: " + profile);
}

std::vector<cplx> vhat_samples(const Grid& g, const PotentialSpec& p) {
    double s = std::pow(p.N, p.beta);
    std::vector<cplx> v(g.np);
    for (int i = 0; i < g.np; ++i) {
        double r = std::sqrt(g.k2(i)) / s;
        v[i] = p.amplitude * vhat_profile(p.profile, r);
    }
    return v;
}

Field sample_vN(const Grid& g, const PotentialSpec& p) {
    Field f(g);
    f.a = vhat_samples(g, p);
    to_phys(f);
    for (auto& z : f.a) z = cplx(z.real(), 0.0); // even real data: imag is rounding
    return f;
}

double vN_mass(const PotentialSpec& p) {
    return p.amplitude * vhat_profile(p.profile, 0.0);
}

bool resolved(const Grid& g, const PotentialSpec& p) {
    return std::pow(p.N, p.beta) <= g.nyquist() + 1e-12;
}

HypothesesReport check_hypotheses(const PotentialSpec& v,
                                  const PotentialSpec& majorant) {
    HypothesesReport r;
    r.beta_ok = v.beta < 1.0;
    r.support_ok = true;
    r.majorant_ok = true;
    const int m = 4096;
    for (int i = 0; i <= m; ++i) {
        double s = 2.0 * i / m;
        double vv = v.amplitude * vhat_profile(v.profile, s);
        double ww = majorant.amplitude * vhat_profile(majorant.profile, s);
        if (s >= 1.0 && vv != 0.0) r.support_ok = false;
        if (std::fabs(vv) > ww + 1e-15) r.majorant_ok = false;
    }
    return r;
}

double field_lp(const Field& f, double p) {
    double s = 0.0;
    for (const auto& z : f.a) s += std::pow(std::abs(z), p);
    return std::pow(s * f.g.cell, 1.0 / p);
}

namespace {

// composite Simpson of fn on [a,b] with m (even) intervals
template <class F>
double simpson(F&& fn, double a, double b, int m) {
    double h = (b - a) / m;
    double s = fn(a) + fn(b);
    for (int i = 1; i < m; ++i) s += fn(a + h * i) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

} // namespace

double v_radial3(const std::string& profile, double amplitude, double s) {
    if (s < 1e-8) {
        double val = simpson(
            [&](double rho) { return vhat_profile(profile, rho) * rho * rho; },
            0.0, 1.0, 2000);
        return amplitude * val / (2.0 * pi * pi);
    }
    double val = simpson(
        [&](double rho) {
            return vhat_profile(profile, rho) * rho * std::sin(rho * s);
        },
        0.0, 1.0, 2000);
    return amplitude * val / (2.0 * pi * pi * s);
}

double vN_l32_radial(const PotentialSpec& p) {
    // v_N(r) = N^{3 beta} v(N^beta r); integrate 4 pi r^2 |v_N|^{3/2} out to
    // where the unscaled profile is negligible (s = N^beta r <= 40)
    double sc = std::pow(p.N, p.beta);
    double rmax = 40.0 / sc;
    auto integrand = [&](double r) {
        double v = std::pow(sc, 3.0) * v_radial3(p.profile, p.amplitude, sc * r);
        return 4.0 * pi * r * r * std::pow(std::fabs(v), 1.5);
    };
    double val = simpson(integrand, 0.0, rmax, 4000);
    return std::pow(val, 2.0 / 3.0);
}

} // namespace hfb
