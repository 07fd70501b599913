// common.hpp
// Shared scalar types, deterministic RNG, and thread-control knobs.
#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

namespace hfb {

using cplx = std::complex<double>;
inline constexpr double pi = 3.141592653589793238462643383279502884;

// Deterministic random stream.  mt19937_64 is bit-specified by the standard;
// the Gaussian is a hand-rolled Box-Muller so the stream does not depend on
// which C++ runtime produced it.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1) with 53 random bits
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double normal();

    cplx cnormal() {            // complex standard normal, E|z|^2 = 1
        double a = normal(), b = normal();
        return cplx(a, b) * 0.7071067811865475244;
    }

    std::uint64_t raw() { return eng_(); }

private:
    std::mt19937_64 eng_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

namespace par {
// Degree of parallelism for the OpenMP kernels.  All parallel loops partition
// independent output elements, so results are bitwise identical for any
// thread count; serial mode exists as the reproducibility reference.
void set_threads(int t);    // t <= 1 means strictly serial
int  threads();
bool serial();
} // namespace par

} // namespace hfb
