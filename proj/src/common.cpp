#include "hfb/common.hpp"

#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hfb {

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    // Box-Muller on (0,1] x [0,1)
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double th = 2.0 * pi * u2;
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
}

namespace par {

namespace {
int g_threads = 1;
}

void set_threads(int t) {
    g_threads = t < 1 ? 1 : t;
#ifdef _OPENMP
    omp_set_num_threads(g_threads);
#endif
}

int threads() { return g_threads; }

bool serial() { return g_threads <= 1; }

} // namespace par
} // namespace hfb
