#include "hfb/grid.hpp"

#include <cmath>

namespace hfb {

Grid Grid::make(int d, int n, double L) {
    if (d < 1 || d > 3) throw std::invalid_argument("grid: d must be 1, 2 or 3");
    if (n < 2 || n % 2 != 0)
        throw std::invalid_argument("grid: n must be even and >= 2");
    if (!(L > 0.0)) throw std::invalid_argument("grid: L must be positive");
    Grid g;
    g.d = d;
    g.n = n;
    g.L = L;
    g.np = 1;
    for (int a = 0; a < d; ++a) g.np *= n;
    g.dx = L / n;
    g.cell = std::pow(g.dx, d);
    g.vol = std::pow(L, d);
    return g;
}

} // namespace hfb
