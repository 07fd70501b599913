// config.hpp
// Versioned run configuration with cross-field validation.  Violations are
// reported by naming the specific inequality that failed, and a canonical
// JSON form feeds the FNV-1a hash that names run directories.
#pragma once

#include <string>

#include "hfb/experiments.hpp"

namespace hfb {

struct RunConfig {
    int version = 1;

    int d = 1;
    int n = 32;
    double L = pi;

    PotentialSpec pot;                 // pot.N is taken from Nlist per run
    std::vector<double> Nlist = {64};

    InitRecipe init;

    std::string scheme = "strang";     // or "rk4"
    std::string route = "direct";      // or "bracket"
    double dt = 1e-3;
    double T = 0.25;
    int store_every = 5;
    int offset_stride = 1;

    NormConfig norms;

    std::uint64_t seed = 1;
};

RunConfig default_config();

std::string config_to_json(const RunConfig& c);       // canonical, sorted keys
RunConfig config_from_json(const std::string& text);  // throws on bad schema
RunConfig load_config(const std::string& path);

// empty string when valid; otherwise the first violated condition, e.g.
// "alpha > 1/2" or "N^beta <= pi*n/L (resolved regime)"
std::string validate_config(const RunConfig& c);

// 64-bit FNV-1a of the canonical JSON, as 16 hex digits
std::string config_hash(const RunConfig& c);

Grid config_grid(const RunConfig& c);
Scheme config_scheme(const RunConfig& c);
RhsRoute config_route(const RunConfig& c);

} // namespace hfb
