// bench_kernels: timing comparison of the OpenMP kernels against the serial
// direct-summation reference, plus a residual column confirming the two
// paths agree.  Timings go to stdout only; nothing here writes run artifacts.
#include <chrono>
#include <cstdio>
#include <string>

#include "hfb/potential.hpp"
#include "hfb/reference.hpp"
#include "hfb/rhs.hpp"

using namespace hfb;
using clk = std::chrono::steady_clock;

namespace {

double seconds(clk::time_point a, clk::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

} // namespace

int main(int argc, char** argv) {
    int n = 48;
    int reps = 3;
    if (argc > 1) n = std::atoi(argv[1]);
    if (argc > 2) reps = std::atoi(argv[2]);

    Grid g = Grid::make(1, n, pi);
    Rng rng(7);
    HFBState s = random_state(g, 16.0, rng);
    PotentialSpec ps;
    ps.beta = 0.5;
    ps.N = 16.0;
    Field vN = sample_vN(g, ps);

    std::printf("n=%d (np=%d), threads=%d, reps=%d\n", n, g.np, par::threads(),
                reps);
    std::printf("%-22s %12s %12s %10s %10s\n", "op", "parallel[s]",
                "reference[s]", "speedup", "residual");

    // composition
    {
        Kernel par_out, ref_out;
        auto t0 = clk::now();
        for (int r = 0; r < reps; ++r)
            par_out = kernel_compose(s.lambda, s.gamma);
        auto t1 = clk::now();
        for (int r = 0; r < reps; ++r)
            ref_out = ref::compose(s.lambda, s.gamma);
        auto t2 = clk::now();
        double tp = seconds(t0, t1) / reps, ts = seconds(t1, t2) / reps;
        std::printf("%-22s %12.4f %12.4f %10.2f %10.2e\n", "compose", tp, ts,
                    ts / tp, kernel_hs_diff(par_out, ref_out));
    }

    // full right-hand side
    {
        RhsOutput par_out, ref_out;
        auto t0 = clk::now();
        for (int r = 0; r < reps; ++r) par_out = rhs_direct(s, vN);
        auto t1 = clk::now();
        for (int r = 0; r < reps; ++r) ref_out = ref::rhs(s, vN);
        auto t2 = clk::now();
        double tp = seconds(t0, t1) / reps, ts = seconds(t1, t2) / reps;
        std::printf("%-22s %12.4f %12.4f %10.2f %10.2e\n", "rhs", tp, ts,
                    ts / tp, rhs_distance(par_out, ref_out));
    }

    // diagonal convolution
    {
        Field par_out, ref_out;
        auto t0 = clk::now();
        for (int r = 0; r < reps; ++r) par_out = conv_diag(vN, s.gamma);
        auto t1 = clk::now();
        for (int r = 0; r < reps; ++r) ref_out = ref::conv_diag(vN, s.gamma);
        auto t2 = clk::now();
        double tp = seconds(t0, t1) / reps, ts = seconds(t1, t2) / reps;
        double m = 0;
        for (int i = 0; i < g.np; ++i)
            m = std::max(m, std::abs(par_out[i] - ref_out[i]));
        std::printf("%-22s %12.4f %12.4f %10.2f %10.2e\n", "conv_diag", tp, ts,
                    ts / tp, m);
    }
    return 0;
}
