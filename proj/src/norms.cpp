#include "hfb/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "hfb/fft.hpp"
#include "hfb/kernel.hpp"

namespace hfb {

double smooth_cutoff(double s) {
    s = std::fabs(s);
    if (s <= 1.0) return 1.0;
    if (s >= 2.0) return 0.0;
    auto h = [](double u) { return std::exp(-1.0 / u); };
    double a = h(2.0 - s), b = h(s - 1.0);
    return a / (a + b);
}

double proj_scale(double N, double beta_prime) {
    double nb = std::pow(N, beta_prime);
    int I = static_cast<int>(std::ceil(std::log2(nb))) - 1;
    return std::ldexp(1.0, I);
}

namespace {

const std::vector<std::vector<cplx>>& slices_of(const SpaceTimeTrace& tr,
                                                Comp comp) {
    return comp == Comp::lambda ? tr.lambda_slice : tr.gamma_slice;
}

const std::vector<Kernel>& snaps_of(const SpaceTimeTrace& tr, Comp comp) {
    const auto& s = comp == Comp::lambda ? tr.lambda_snap : tr.gamma_snap;
    if (s.empty())
        throw std::runtime_error("norms: trace has no kernel snapshots");
    return s;
}

std::array<int, 3> norm_offset(const Grid& g, const std::array<int, 3>& w) {
    std::array<int, 3> o{0, 0, 0};
    for (int a = 0; a < g.d; ++a) o[a] = ((w[a] % g.n) + g.n) % g.n;
    return o;
}

// index of offset w in tr.offsets, -1 if absent; centered diagonals
// K(x+w, x-w) reuse the plain slice at offset -2w (a translation in x,
// which none of the norms here see)
int offset_index(const SpaceTimeTrace& tr, const std::array<int, 3>& w,
                 bool centered) {
    std::array<int, 3> want = w;
    if (centered)
        for (int a = 0; a < 3; ++a) want[a] = -2 * w[a];
    want = norm_offset(tr.g, want);
    for (size_t i = 0; i < tr.offsets.size(); ++i)
        if (norm_offset(tr.g, tr.offsets[i]) == want)
            return static_cast<int>(i);
    return -1;
}

int offset_index_or_throw(const SpaceTimeTrace& tr,
                          const std::array<int, 3>& w, bool centered) {
    int i = offset_index(tr, w, centered);
    if (i < 0) throw std::runtime_error("norms: offset not recorded in trace");
    return i;
}

// (sum_i v_i^p * weight)^{1/p}; p <= 0 means the sup
double lp_of(const std::vector<double>& v, double p, double weight) {
    if (p <= 0.0) {
        double m = 0.0;
        for (double x : v) m = std::max(m, x);
        return m;
    }
    double s = 0.0;
    for (double x : v) s += std::pow(x, p);
    return std::pow(s * weight, 1.0 / p);
}

// projection factor table over Fourier pairs, or empty if no projection
std::vector<double> proj_table(const Grid& g, ProjSpec proj, double cut) {
    if (proj.minus == 0 && proj.plus == 0) return {};
    if (cut <= 0.0) throw std::runtime_error("norms: projection needs a scale");
    const int np = g.np;
    std::vector<std::array<double, 3>> kv(np);
    for (int i = 0; i < np; ++i) kv[i] = g.kvec(i);
    std::vector<double> tab(static_cast<size_t>(np) * np, 1.0);
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x)
        for (int y = 0; y < np; ++y) {
            double dm = 0.0, dp = 0.0;
            for (int a = 0; a < g.d; ++a) {
                double u = kv[x][a] - kv[y][a], v = kv[x][a] + kv[y][a];
                dm += u * u;
                dp += v * v;
            }
            double f = 1.0;
            if (proj.minus != 0) {
                double low = smooth_cutoff(std::sqrt(dm) / cut);
                f *= (proj.minus > 0) ? low : 1.0 - low;
            }
            if (proj.plus != 0) {
                double low = smooth_cutoff(std::sqrt(dp) / cut);
                f *= (proj.plus > 0) ? low : 1.0 - low;
            }
            tab[static_cast<size_t>(x) * np + y] = f;
        }
    return tab;
}

void apply_proj(Kernel& Khat, const std::vector<double>& tab) {
    if (tab.empty()) return;
    for (size_t i = 0; i < Khat.a.size(); ++i) Khat.a[i] *= tab[i];
}

} // namespace

double mixed_norm(const SpaceTimeTrace& tr, Comp comp, double ax, double ay,
                  double p, double q, bool reversed, ProjSpec proj,
                  double proj_cut) {
    const auto& snaps = snaps_of(tr, comp);
    const Grid& g = tr.g;
    const double dtw = tr.dt * tr.kernel_stride;
    auto sx = symbol_bessel(g, ax);
    auto sy = symbol_bessel(g, ay);
    auto tab = proj_table(g, proj, proj_cut);

    std::vector<double> per_t;
    per_t.reserve(snaps.size());
    std::vector<double> S(g.np);
    for (const Kernel& snap : snaps) {
        Kernel K = snap;
        kernel_to_fourier(K);
        kernel_apply_symbol(K, &sx, &sy);
        apply_proj(K, tab);
        if (reversed) K = kernel_transpose(K);
        // per remaining-Fourier column eta: invert the x slot, then the
        // L^2(d eta) at fixed x is Parseval over eta
        std::fill(S.begin(), S.end(), 0.0);
        Field col(g);
        for (int y = 0; y < g.np; ++y) {
            for (int x = 0; x < g.np; ++x) col[x] = K.at(x, y);
            to_phys(col);
            for (int x = 0; x < g.np; ++x) S[x] += std::norm(col[x]);
        }
        std::vector<double> h(g.np);
        for (int x = 0; x < g.np; ++x) h[x] = std::sqrt(S[x] / g.vol);
        per_t.push_back(lp_of(h, q, g.cell));
    }
    return lp_of(per_t, p, dtw);
}

double collapse_norm(const SpaceTimeTrace& tr, Comp comp,
                     const std::array<int, 3>& w, double bessel_pow,
                     double riesz_pow, bool centered) {
    const Grid& g = tr.g;
    int idx = offset_index_or_throw(tr, w, centered);
    const auto& series = slices_of(tr, comp)[idx];
    std::vector<double> sym(g.np);
    for (int i = 0; i < g.np; ++i) {
        double k2 = g.k2(i);
        sym[i] = std::pow(1.0 + k2, 0.5 * bessel_pow) *
                 std::pow(k2, 0.5 * riesz_pow);
    }
    double acc = 0.0;
    Field f(g);
    for (int t = 0; t < tr.nt; ++t) {
        for (int i = 0; i < g.np; ++i)
            f[i] = series[static_cast<size_t>(t) * g.np + i];
        to_fourier(f);
        double l2sq = 0.0;
        for (int i = 0; i < g.np; ++i) l2sq += sym[i] * sym[i] * std::norm(f[i]);
        acc += (l2sq / g.vol) * tr.dt;
    }
    return std::sqrt(acc);
}

double collapse_sup(const SpaceTimeTrace& tr, Comp comp, double bessel_pow,
                    double riesz_pow, bool centered) {
    double m = 0.0;
    for (const auto& w : tr.offsets) {
        if (centered && offset_index(tr, w, true) < 0) continue;
        m = std::max(m,
                     collapse_norm(tr, comp, w, bessel_pow, riesz_pow, centered));
    }
    return m;
}

double quarter_time_norm(const SpaceTimeTrace& tr, Comp comp,
                         const std::array<int, 3>& w, bool centered,
                         int pad_factor) {
    const Grid& g = tr.g;
    int idx = offset_index_or_throw(tr, w, centered);
    const auto& series = slices_of(tr, comp)[idx];
    const int P = pad_factor * tr.nt;
    std::vector<cplx> buf(static_cast<size_t>(g.np) * P, cplx(0.0));
    for (int t = 0; t < tr.nt; ++t)
        for (int x = 0; x < g.np; ++x)
            buf[static_cast<size_t>(x) * P + t] =
                series[static_cast<size_t>(t) * g.np + x];
    dft1d_batch(buf.data(), P, g.np, -1);
    const double tau0 = 2.0 * pi / (P * tr.dt);
    double acc = 0.0;
    for (int x = 0; x < g.np; ++x)
        for (int m = 0; m < P; ++m) {
            int mw = (m < P / 2) ? m : m - P;
            double tau = tau0 * mw;
            acc += std::sqrt(std::fabs(tau)) *
                   std::norm(tr.dt * buf[static_cast<size_t>(x) * P + m]);
        }
    return std::sqrt(acc * g.cell / (P * tr.dt));
}

double quarter_time_sup(const SpaceTimeTrace& tr, Comp comp, bool centered,
                        int pad_factor) {
    double m = 0.0;
    for (const auto& w : tr.offsets) {
        if (centered && offset_index(tr, w, true) < 0) continue;
        m = std::max(m, quarter_time_norm(tr, comp, w, centered, pad_factor));
    }
    return m;
}

double xsb_norm(const SpaceTimeTrace& tr, Comp comp, double b, bool sign_minus,
                double ax, double ay, ProjSpec proj, double proj_cut,
                int pad_factor) {
    const auto& snaps = snaps_of(tr, comp);
    const Grid& g = tr.g;
    const int ns = static_cast<int>(snaps.size());
    const double dtw = tr.dt * tr.kernel_stride;
    const int P = pad_factor * ns;
    const size_t npairs = static_cast<size_t>(g.np) * g.np;

    auto sx = symbol_bessel(g, ax);
    auto sy = symbol_bessel(g, ay);
    auto tab = proj_table(g, proj, proj_cut);

    std::vector<std::vector<cplx>> planes;
    planes.reserve(ns);
    for (const Kernel& snap : snaps) {
        Kernel K = snap;
        kernel_to_fourier(K);
        kernel_apply_symbol(K, &sx, &sy);
        apply_proj(K, tab);
        planes.push_back(std::move(K.a));
    }

    std::vector<double> k2(g.np);
    for (int i = 0; i < g.np; ++i) k2[i] = g.k2(i);
    const double tau0 = 2.0 * pi / (P * dtw);
    const double sgn = sign_minus ? -1.0 : 1.0;

    double acc = 0.0;
    const size_t chunk = 4096;
    std::vector<cplx> buf;
    for (size_t p0 = 0; p0 < npairs; p0 += chunk) {
        const size_t pc = std::min(chunk, npairs - p0);
        buf.assign(pc * P, cplx(0.0));
        for (int t = 0; t < ns; ++t)
            for (size_t pi = 0; pi < pc; ++pi)
                buf[pi * P + t] = planes[t][p0 + pi];
        dft1d_batch(buf.data(), P, static_cast<int>(pc), -1);
        for (size_t pi = 0; pi < pc; ++pi) {
            const int x = static_cast<int>((p0 + pi) / g.np);
            const int y = static_cast<int>((p0 + pi) % g.np);
            const double disp = k2[x] + sgn * k2[y];
            for (int m = 0; m < P; ++m) {
                int mw = (m < P / 2) ? m : m - P;
                double u = tau0 * mw + disp;
                acc += std::pow(1.0 + u * u, b) * std::norm(dtw * buf[pi * P + m]);
            }
        }
    }
    return std::sqrt(acc / (P * dtw) / (g.vol * g.vol));
}

double strichartz_phi(const SpaceTimeTrace& tr, double alpha, double p,
                      double q) {
    const Grid& g = tr.g;
    auto sym = symbol_bessel(g, alpha);
    std::vector<double> per_t;
    per_t.reserve(tr.nt);
    Field f(g);
    std::vector<double> h(g.np);
    for (int t = 0; t < tr.nt; ++t) {
        for (int i = 0; i < g.np; ++i)
            f[i] = tr.phi[static_cast<size_t>(t) * g.np + i];
        to_fourier(f);
        apply_symbol(f, sym);
        to_phys(f);
        for (int i = 0; i < g.np; ++i) h[i] = std::abs(f[i]);
        per_t.push_back(lp_of(h, q, g.cell));
    }
    return lp_of(per_t, p, tr.dt);
}

double NormReport::get(const std::string& name) const {
    for (const auto& [k, v] : entries)
        if (k == name) return v;
    throw std::runtime_error("NormReport: no entry named " + name);
}

std::string NormReport::csv() const {
    std::string out = "name,value\n";
    char line[128];
    for (const auto& [k, v] : entries) {
        std::snprintf(line, sizeof line, "%s,%.17g\n", k.c_str(), v);
        out += line;
    }
    return out;
}

NormReport composite_norms(const SpaceTimeTrace& tr, const NormConfig& cfg) {
    NormReport R;
    const double a = cfg.alpha;
    const int pf = cfg.pad_factor;

    // one-particle Strichartz norm
    double p1 = strichartz_phi(tr, a, 2.0, 6.0);
    double p2 = strichartz_phi(tr, a, 0.0, 2.0);
    R.put("phi.L2L6", p1);
    R.put("phi.LinfL2", p2);
    R.put("phi.total", p1 + p2);

    auto mixed_block = [&](Comp c, const std::string& tag, ProjSpec proj,
                           double cut) {
        double m1 = mixed_norm(tr, c, a, a, 2.0, 6.0, false, proj, cut);
        double m2 = mixed_norm(tr, c, a, a, 0.0, 2.0, false, proj, cut);
        double m3 = mixed_norm(tr, c, a, a, 2.0, 6.0, true, proj, cut);
        double m4 = mixed_norm(tr, c, a, a, 0.0, 2.0, true, proj, cut);
        R.put(tag + ".L2L6L2", m1);
        R.put(tag + ".LinfL2L2", m2);
        R.put(tag + ".L2L6L2.rev", m3);
        R.put(tag + ".LinfL2L2.rev", m4);
        return m1 + m2 + m3 + m4;
    };

    // pair-wavefunction norm
    double lsum = mixed_block(Comp::lambda, "lambda", {}, 0.0);
    double l5 = collapse_sup(tr, Comp::lambda, a, 0.0, false);
    double l6 = quarter_time_sup(tr, Comp::lambda, false, pf);
    R.put("lambda.collapse", l5);
    R.put("lambda.quartertime", l6);
    R.put("lambda.total", lsum + l5 + l6);

    // density-kernel norm (dotted variant: half a derivative of the collapse
    // weight is traded for a Riesz factor)
    double gsum = mixed_block(Comp::gamma, "gamma", {}, 0.0);
    double g5 = collapse_sup(tr, Comp::gamma, a - 0.5, 0.5, false);
    double g6 = quarter_time_sup(tr, Comp::gamma, false, pf);
    R.put("gamma.collapse", g5);
    R.put("gamma.quartertime", g6);
    R.put("gamma.total", gsum + g5 + g6);

    // projected script norm of Lambda
    const double cut = proj_scale(tr.N, cfg.beta_prime);
    const double b = cfg.xb;
    double s1 = xsb_norm(tr, Comp::lambda, b, false, a, a, ProjSpec{-1, 0},
                         cut, pf);
    double s2 = xsb_norm(tr, Comp::lambda, b, false, a, a, ProjSpec{0, -1},
                         cut, pf);
    R.put("script.Xb.himinus", s1);
    R.put("script.Xb.hiplus", s2);
    double s3 = mixed_block(Comp::lambda, "script.lowlow", ProjSpec{1, 1}, cut);
    double s4 = collapse_sup(tr, Comp::lambda, a, 0.0, true);
    double s5 = quarter_time_sup(tr, Comp::lambda, true, pf);
    R.put("script.collapse.centered", s4);
    R.put("script.quartertime.centered", s5);
    double s6 = xsb_norm(tr, Comp::lambda, b, false, 0.0, 0.0, {}, 0.0, pf);
    double s7 = xsb_norm(tr, Comp::lambda, b, false, a, a, ProjSpec{1, 1},
                         cut, pf) / tr.N;
    R.put("script.Xb.plain", s6);
    R.put("script.Xb.lowlow.overN", s7);
    R.put("script.total", s1 + s2 + s3 + s4 + s5 + s6 + s7);

    return R;
}

} // namespace hfb
