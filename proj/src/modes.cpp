#include "hfb/modes.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>

#include "hfb/fft.hpp"

namespace hfb {

std::array<double, 3> ModeSet::kxi(int j) const {
    std::array<double, 3> k{0, 0, 0};
    for (int a = 0; a < g.d; ++a) k[a] = 2.0 * pi * modes[j].kx[a] / g.L;
    return k;
}

std::array<double, 3> ModeSet::keta(int j) const {
    std::array<double, 3> k{0, 0, 0};
    for (int a = 0; a < g.d; ++a) k[a] = 2.0 * pi * modes[j].ky[a] / g.L;
    return k;
}

double ModeSet::disp(int j) const {
    double s = 0.0;
    auto x = kxi(j), y = keta(j);
    for (int a = 0; a < g.d; ++a) s += x[a] * x[a] + y[a] * y[a];
    return s;
}

cplx window_hat(double w, double T) {
    if (std::fabs(w * T) < 1e-6)
        return cplx(T, -0.5 * w * T * T); // leading Taylor terms
    cplx iw(0.0, w);
    return (1.0 - std::exp(-iw * T)) / iw;
}

ModeSet random_modeset(const Grid& g, double T, int nt, int nmodes, int kmax,
                       int nharm, double tau_max, Rng& rng) {
    if (2 * kmax + 1 > g.n)
        throw std::invalid_argument("modes: kmax exceeds the streaming grid");
    ModeSet ms;
    ms.g = g;
    ms.T = T;
    ms.nt = nt;
    std::set<std::array<int, 6>> seen;
    auto draw = [&]() {
        return static_cast<int>(rng.uniform() * (2 * kmax + 1)) - kmax;
    };
    while (static_cast<int>(ms.modes.size()) < nmodes) {
        Mode m;
        for (int a = 0; a < g.d; ++a) {
            m.kx[a] = draw();
            m.ky[a] = draw();
        }
        std::array<int, 6> key{m.kx[0], m.kx[1], m.kx[2],
                               m.ky[0], m.ky[1], m.ky[2]};
        if (!seen.insert(key).second) continue;
        for (int r = 0; r < nharm; ++r) {
            Harmonic h;
            h.c = rng.cnormal();
            h.tau = (2.0 * rng.uniform() - 1.0) * tau_max;
            m.h.push_back(h);
        }
        ms.modes.push_back(std::move(m));
    }
    ms.series.assign(nmodes, std::vector<cplx>(nt, cplx(0.0)));
    return ms;
}

void sample_source(ModeSet& ms) {
    const double dt = ms.dt();
    for (size_t j = 0; j < ms.modes.size(); ++j)
        for (int t = 0; t < ms.nt; ++t) {
            cplx s(0.0);
            for (const auto& h : ms.modes[j].h)
                s += h.c * std::exp(cplx(0.0, h.tau * dt * t));
            ms.series[j][t] = s;
        }
}

void sample_free(ModeSet& ms, const std::vector<cplx>& amp0) {
    const double dt = ms.dt();
    for (size_t j = 0; j < ms.modes.size(); ++j) {
        const double D = ms.disp(static_cast<int>(j));
        for (int t = 0; t < ms.nt; ++t)
            ms.series[j][t] = amp0[j] * std::exp(cplx(0.0, -D * dt * t));
    }
}

void sample_duhamel(ModeSet& ms) {
    const double dt = ms.dt();
    for (size_t j = 0; j < ms.modes.size(); ++j) {
        const double D = ms.disp(static_cast<int>(j));
        for (int t = 0; t < ms.nt; ++t) {
            cplx s(0.0);
            for (const auto& h : ms.modes[j].h)
                s += h.c * window_hat(h.tau + D, ms.T) *
                     std::exp(cplx(0.0, h.tau * dt * t));
            ms.series[j][t] = s;
        }
    }
}

void sample_solution(ModeSet& ms, const std::vector<cplx>& amp0) {
    ModeSet du = ms;
    sample_free(ms, amp0);
    sample_duhamel(du);
    for (size_t j = 0; j < ms.modes.size(); ++j)
        for (int t = 0; t < ms.nt; ++t) ms.series[j][t] += du.series[j][t];
}

std::vector<double> mode_weight_bessel(const ModeSet& ms, double ax,
                                       double ay) {
    std::vector<double> wt(ms.modes.size());
    for (size_t j = 0; j < ms.modes.size(); ++j) {
        auto x = ms.kxi(static_cast<int>(j)), y = ms.keta(static_cast<int>(j));
        double kx2 = 0, ky2 = 0;
        for (int a = 0; a < ms.g.d; ++a) {
            kx2 += x[a] * x[a];
            ky2 += y[a] * y[a];
        }
        wt[j] = std::pow(1.0 + kx2, 0.5 * ax) * std::pow(1.0 + ky2, 0.5 * ay);
    }
    return wt;
}

std::vector<double> mode_weight_angle(const ModeSet& ms, double alpha) {
    std::vector<double> wt(ms.modes.size());
    for (size_t j = 0; j < ms.modes.size(); ++j) {
        auto x = ms.kxi(static_cast<int>(j)), y = ms.keta(static_cast<int>(j));
        double s2 = 0;
        for (int a = 0; a < ms.g.d; ++a) {
            double u = x[a] + y[a];
            s2 += u * u;
        }
        wt[j] = std::pow(1.0 + s2, 0.5 * alpha);
    }
    return wt;
}

double modes_xnorm(const ModeSet& ms, double b, const std::vector<double>& wt,
                   int pad_factor) {
    const int nm = static_cast<int>(ms.modes.size());
    const int P = pad_factor * ms.nt;
    const double dt = ms.dt();
    std::vector<cplx> buf(static_cast<size_t>(nm) * P, cplx(0.0));
    for (int j = 0; j < nm; ++j)
        for (int t = 0; t < ms.nt; ++t)
            buf[static_cast<size_t>(j) * P + t] = ms.series[j][t];
    dft1d_batch(buf.data(), P, nm, -1);
    const double tau0 = 2.0 * pi / (P * dt);
    double acc = 0.0;
    for (int j = 0; j < nm; ++j) {
        const double D = ms.disp(j);
        const double w2 = wt[j] * wt[j];
        for (int m = 0; m < P; ++m) {
            int mw = (m < P / 2) ? m : m - P;
            double u = tau0 * mw + D;
            acc += w2 * std::pow(1.0 + u * u, b) *
                   std::norm(dt * buf[static_cast<size_t>(j) * P + m]);
        }
    }
    return ms.g.vol * std::sqrt(acc / (P * dt));
}

namespace {

// indices grouped by a shared integer triple key
std::map<std::array<int, 3>, std::vector<int>> group_by(
    const ModeSet& ms, bool by_eta) {
    std::map<std::array<int, 3>, std::vector<int>> gr;
    for (size_t j = 0; j < ms.modes.size(); ++j) {
        std::array<int, 3> key{};
        for (int a = 0; a < 3; ++a)
            key[a] = by_eta ? ms.modes[j].ky[a]
                            : ms.modes[j].kx[a] + ms.modes[j].ky[a];
        gr[key].push_back(static_cast<int>(j));
    }
    return gr;
}

int freq_bin(const Grid& g, const std::array<int, 3>& m) {
    std::array<int, 3> c{0, 0, 0};
    for (int a = 0; a < g.d; ++a) c[a] = ((m[a] % g.n) + g.n) % g.n;
    return g.flat(c);
}

double lp_weighted(const std::vector<double>& v, double p, double weight) {
    if (p <= 0.0) {
        double m = 0.0;
        for (double x : v) m = std::max(m, x);
        return m;
    }
    double s = 0.0;
    for (double x : v) s += std::pow(x, p);
    return std::pow(s * weight, 1.0 / p);
}

} // namespace

double modes_mixed_space(const ModeSet& ms, int t_index, double q,
                         const std::vector<double>& wt) {
    const Grid& g = ms.g;
    auto groups = group_by(ms, true);
    std::vector<double> S(g.np, 0.0);
    Field f(g);
    for (const auto& [eta, idx] : groups) {
        std::fill(f.a.begin(), f.a.end(), cplx(0.0));
        for (int j : idx) {
            int bin = freq_bin(g, ms.modes[j].kx);
            f[bin] += wt[j] * ms.series[j][t_index] * g.vol;
        }
        to_phys(f);
        for (int x = 0; x < g.np; ++x) S[x] += std::norm(f[x]);
    }
    std::vector<double> h(g.np);
    for (int x = 0; x < g.np; ++x) h[x] = std::sqrt(g.vol * S[x]);
    return lp_weighted(h, q, g.cell);
}

double modes_mixed_norm(const ModeSet& ms, double p, double q,
                        const std::vector<double>& wt) {
    std::vector<double> per_t(ms.nt);
    for (int t = 0; t < ms.nt; ++t)
        per_t[t] = modes_mixed_space(ms, t, q, wt);
    return lp_weighted(per_t, p, ms.dt());
}

double modes_l2_space(const ModeSet& ms, const std::vector<cplx>& amp,
                      const std::vector<double>& wt) {
    double s = 0.0;
    for (size_t j = 0; j < amp.size(); ++j)
        s += wt[j] * wt[j] * std::norm(amp[j]);
    return ms.g.vol * std::sqrt(s);
}

double modes_quarter_time_sup(const ModeSet& ms,
                              const std::vector<std::array<int, 3>>& zlist,
                              int pad_factor) {
    const Grid& g = ms.g;
    auto groups = group_by(ms, false); // by sigma = kx + ky
    const int P = pad_factor * ms.nt;
    const double dt = ms.dt();
    const double tau0 = 2.0 * pi / (P * dt);
    std::vector<cplx> buf;
    double best = 0.0;
    for (const auto& z : zlist) {
        std::array<double, 3> zp{0, 0, 0};
        for (int a = 0; a < g.d; ++a) zp[a] = g.dx * z[a];
        double acc = 0.0;
        for (const auto& [sigma, idx] : groups) {
            buf.assign(P, cplx(0.0));
            for (int j : idx) {
                auto ke = ms.keta(j);
                double ph = 0.0;
                for (int a = 0; a < g.d; ++a) ph += ke[a] * zp[a];
                cplx e = std::exp(cplx(0.0, ph));
                for (int t = 0; t < ms.nt; ++t) buf[t] += e * ms.series[j][t];
            }
            dft1d_batch(buf.data(), P, 1, -1);
            for (int m = 0; m < P; ++m) {
                int mw = (m < P / 2) ? m : m - P;
                acc += std::sqrt(std::fabs(tau0 * mw)) * std::norm(dt * buf[m]);
            }
        }
        best = std::max(best, g.vol * std::sqrt(acc / (P * dt)));
    }
    return best;
}

std::vector<std::array<int, 3>> coarse_zlist(const Grid& g, int per_axis) {
    int stride = std::max(1, g.n / per_axis);
    int count = g.n / stride;
    std::vector<std::array<int, 3>> out;
    std::array<int, 3> lim{1, 1, 1};
    for (int a = 0; a < g.d; ++a) lim[a] = count;
    for (int i = 0; i < lim[0]; ++i)
        for (int j = 0; j < lim[1]; ++j)
            for (int k = 0; k < lim[2]; ++k)
                out.push_back({i * stride, j * stride, k * stride});
    return out;
}

} // namespace hfb
