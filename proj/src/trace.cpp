#include "hfb/trace.hpp"

#include <algorithm>

namespace hfb {

std::vector<std::array<int, 3>> default_offsets(const Grid& g) {
    std::vector<std::array<int, 3>> out;
    if (g.d == 1) {
        for (int w = 0; w < g.n; ++w) out.push_back({w, 0, 0});
        return out;
    }
    out.push_back({0, 0, 0});
    for (int a = 0; a < g.d; ++a)
        for (int m : {1, -1, 2, -2, 4, -4}) {
            std::array<int, 3> w{0, 0, 0};
            w[a] = m;
            out.push_back(w);
        }
    return out;
}

namespace {

void push_sample(SpaceTimeTrace& tr, const HFBState& s, int j) {
    const int np = s.g.np;
    for (int i = 0; i < np; ++i) tr.phi[static_cast<size_t>(j) * np + i] = s.phi[i];
    for (size_t w = 0; w < tr.offsets.size(); ++w) {
        Field ls = kernel_slice(s.lambda, tr.offsets[w]);
        Field gs = kernel_slice(s.gamma, tr.offsets[w]);
        for (int i = 0; i < np; ++i) {
            tr.lambda_slice[w][static_cast<size_t>(j) * np + i] = ls[i];
            tr.gamma_slice[w][static_cast<size_t>(j) * np + i] = gs[i];
        }
    }
    if (tr.kernel_stride > 0 && j % tr.kernel_stride == 0) {
        tr.lambda_snap.push_back(s.lambda);
        tr.gamma_snap.push_back(s.gamma);
    }
}

} // namespace

SpaceTimeTrace record_evolution(const HFBState& s0, const Field& vN, double dt,
                                int nsteps, Scheme scheme, RhsRoute route,
                                const std::vector<std::array<int, 3>>& offsets,
                                int kernel_stride) {
    SpaceTimeTrace tr;
    tr.g = s0.g;
    tr.dt = dt;
    tr.nt = nsteps;
    tr.N = s0.N;
    tr.offsets = offsets;
    tr.kernel_stride = kernel_stride;
    tr.phi.assign(static_cast<size_t>(nsteps) * s0.g.np, cplx(0.0));
    tr.lambda_slice.assign(offsets.size(),
                           std::vector<cplx>(tr.phi.size(), cplx(0.0)));
    tr.gamma_slice = tr.lambda_slice;

    EvolveResult res =
        evolve(s0, vN, dt, nsteps, scheme, route,
               [&](int step, double, const HFBState& s) {
                   if (step < nsteps) push_sample(tr, s, step);
               });
    tr.nan_abort = res.nan_abort;
    tr.recorded = std::min(res.steps_done + 1, nsteps);
    return tr;
}

SpaceTimeTrace truncate_trace(const SpaceTimeTrace& tr, int nt_sub) {
    SpaceTimeTrace out;
    out.g = tr.g;
    out.dt = tr.dt;
    out.nt = nt_sub;
    out.N = tr.N;
    out.offsets = tr.offsets;
    out.kernel_stride = tr.kernel_stride;
    const size_t len = static_cast<size_t>(nt_sub) * tr.g.np;
    out.phi.assign(tr.phi.begin(), tr.phi.begin() + len);
    out.lambda_slice.resize(tr.offsets.size());
    out.gamma_slice.resize(tr.offsets.size());
    for (size_t w = 0; w < tr.offsets.size(); ++w) {
        out.lambda_slice[w].assign(tr.lambda_slice[w].begin(),
                                   tr.lambda_slice[w].begin() + len);
        out.gamma_slice[w].assign(tr.gamma_slice[w].begin(),
                                  tr.gamma_slice[w].begin() + len);
    }
    if (tr.kernel_stride > 0) {
        int ns = (nt_sub + tr.kernel_stride - 1) / tr.kernel_stride;
        ns = std::min(ns, tr.snaps());
        out.lambda_snap.assign(tr.lambda_snap.begin(),
                               tr.lambda_snap.begin() + ns);
        out.gamma_snap.assign(tr.gamma_snap.begin(),
                              tr.gamma_snap.begin() + ns);
    }
    return out;
}

} // namespace hfb
