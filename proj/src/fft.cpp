#include "hfb/fft.hpp"

#include <cmath>
#include <map>
#include <tuple>

#include <fftw3.h>

namespace hfb {
namespace {

// Plan cache.  Plans are created with FFTW_ESTIMATE | FFTW_UNALIGNED and
// reused through fftw_execute_dft, so they work on any buffer.  Keyed by the
// full many-plan geometry.
using PlanKey = std::tuple<int, int, int, int, int, int>; // rank,n,howmany,stride,dist,sign

fftw_plan get_plan(int rank, int n, int howmany, int stride, int dist,
                   int sign) {
    static std::map<PlanKey, fftw_plan> cache;
    PlanKey key{rank, n, howmany, stride, dist, sign};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<int> dims(rank, n);
    // dummy buffer large enough for the layout described by the key
    long total = 1;
    for (int a = 0; a < rank; ++a) total *= n;
    long span = (total - 1) * static_cast<long>(stride) +
                (howmany - 1) * static_cast<long>(dist) + 1;
    std::vector<cplx> buf(static_cast<size_t>(span));
    auto* p = reinterpret_cast<fftw_complex*>(buf.data());
    fftw_plan plan = fftw_plan_many_dft(rank, dims.data(), howmany, p, nullptr,
                                        stride, dist, p, nullptr, stride, dist,
                                        sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

void exec(fftw_plan plan, cplx* data) {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, p, p);
}

void scale(std::vector<cplx>& a, double s) {
    for (auto& z : a) z *= s;
}

} // namespace

void to_fourier(Field& f) {
    exec(get_plan(f.g.d, f.g.n, 1, 1, 0, FFTW_FORWARD), f.a.data());
    scale(f.a, f.g.cell);
}

void to_phys(Field& f) {
    exec(get_plan(f.g.d, f.g.n, 1, 1, 0, FFTW_BACKWARD), f.a.data());
    scale(f.a, 1.0 / f.g.vol);
}

Field fourier_of(const Field& f) {
    Field out = f;
    to_fourier(out);
    return out;
}

void kernel_to_fourier(Kernel& K) {
    const int np = K.g.np;
    // x slot: stride np, consecutive kernels dist 1, one per y
    exec(get_plan(K.g.d, K.g.n, np, np, 1, FFTW_FORWARD), K.a.data());
    // y slot: contiguous rows
    exec(get_plan(K.g.d, K.g.n, np, 1, np, FFTW_FORWARD), K.a.data());
    scale(K.a, K.g.cell * K.g.cell);
}

void kernel_to_phys(Kernel& K) {
    const int np = K.g.np;
    exec(get_plan(K.g.d, K.g.n, np, np, 1, FFTW_BACKWARD), K.a.data());
    exec(get_plan(K.g.d, K.g.n, np, 1, np, FFTW_BACKWARD), K.a.data());
    scale(K.a, 1.0 / (K.g.vol * K.g.vol));
}

void dft1d_batch(cplx* data, int len, int batch, int sign) {
    exec(get_plan(1, len, batch, 1, len,
                  sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD),
         data);
}

void apply_symbol(Field& f, const std::vector<cplx>& s) {
    for (int i = 0; i < f.g.np; ++i) f.a[i] *= s[i];
}

void kernel_apply_symbol(Kernel& K, const std::vector<cplx>* sx,
                         const std::vector<cplx>* sy) {
    const int np = K.g.np;
#pragma omp parallel for schedule(static)
    for (int x = 0; x < np; ++x) {
        cplx wx = sx ? (*sx)[x] : cplx(1.0);
        cplx* row = K.a.data() + static_cast<size_t>(x) * np;
        if (sy) {
            for (int y = 0; y < np; ++y) row[y] *= wx * (*sy)[y];
        } else {
            for (int y = 0; y < np; ++y) row[y] *= wx;
        }
    }
}

Field fourier_multiplier(const Field& f, const std::vector<cplx>& s) {
    Field out = f;
    to_fourier(out);
    apply_symbol(out, s);
    to_phys(out);
    return out;
}

std::vector<cplx> symbol_bessel(const Grid& g, double alpha) {
    std::vector<cplx> s(g.np);
    for (int i = 0; i < g.np; ++i)
        s[i] = std::pow(1.0 + g.k2(i), 0.5 * alpha);
    return s;
}

std::vector<cplx> symbol_riesz(const Grid& g, double alpha) {
    std::vector<cplx> s(g.np);
    for (int i = 0; i < g.np; ++i)
        s[i] = std::pow(g.k2(i), 0.5 * alpha);   // zero mode -> 0 for alpha>0
    return s;
}

std::vector<cplx> symbol_free_phase(const Grid& g, double t) {
    std::vector<cplx> s(g.np);
    for (int i = 0; i < g.np; ++i) {
        double ph = -g.k2(i) * t;
        s[i] = cplx(std::cos(ph), std::sin(ph));
    }
    return s;
}

} // namespace hfb
