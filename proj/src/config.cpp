#include "hfb/config.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace hfb {

using nlohmann::json;

RunConfig default_config() { return RunConfig{}; }

namespace {

json to_json_obj(const RunConfig& c) {
    json j;
    j["version"] = c.version;
    j["grid"] = {{"d", c.d}, {"n", c.n}, {"L", c.L}};
    j["potential"] = {{"profile", c.pot.profile},
                      {"amplitude", c.pot.amplitude},
                      {"beta", c.pot.beta},
                      {"N", c.Nlist}};
    j["initial"] = {{"phi_amp", c.init.phi_amp},
                    {"phi_width", c.init.phi_width},
                    {"exc_sigma", c.init.exc_sigma},
                    {"exc_width", c.init.exc_width}};
    j["scheme"] = {{"method", c.scheme},
                   {"route", c.route},
                   {"dt", c.dt},
                   {"T", c.T},
                   {"store_every", c.store_every},
                   {"offset_stride", c.offset_stride}};
    j["norms"] = {{"alpha", c.norms.alpha},
                  {"xb", c.norms.xb},
                  {"delta", c.norms.delta},
                  {"beta_prime", c.norms.beta_prime},
                  {"pad_factor", c.norms.pad_factor}};
    j["seed"] = c.seed;
    return j;
}

} // namespace

std::string config_to_json(const RunConfig& c) {
    // nlohmann::json objects keep keys sorted, so dump() is canonical
    return to_json_obj(c).dump(2) + "\n";
}

RunConfig config_from_json(const std::string& text) {
    json j = json::parse(text);
    RunConfig c;
    c.version = j.at("version").get<int>();
    if (c.version != 1)
        throw std::runtime_error("config: unknown schema version");
    const auto& g = j.at("grid");
    c.d = g.at("d").get<int>();
    c.n = g.at("n").get<int>();
    c.L = g.at("L").get<double>();
    const auto& p = j.at("potential");
    c.pot.profile = p.at("profile").get<std::string>();
    c.pot.amplitude = p.at("amplitude").get<double>();
    c.pot.beta = p.at("beta").get<double>();
    if (p.at("N").is_array())
        c.Nlist = p.at("N").get<std::vector<double>>();
    else
        c.Nlist = {p.at("N").get<double>()};
    const auto& in = j.at("initial");
    c.init.phi_amp = in.at("phi_amp").get<double>();
    c.init.phi_width = in.at("phi_width").get<double>();
    c.init.exc_sigma = in.at("exc_sigma").get<double>();
    c.init.exc_width = in.at("exc_width").get<double>();
    const auto& s = j.at("scheme");
    c.scheme = s.at("method").get<std::string>();
    c.route = s.at("route").get<std::string>();
    c.dt = s.at("dt").get<double>();
    c.T = s.at("T").get<double>();
    c.store_every = s.at("store_every").get<int>();
    c.offset_stride = s.at("offset_stride").get<int>();
    const auto& nn = j.at("norms");
    c.norms.alpha = nn.at("alpha").get<double>();
    c.norms.xb = nn.at("xb").get<double>();
    c.norms.delta = nn.at("delta").get<double>();
    c.norms.beta_prime = nn.at("beta_prime").get<double>();
    c.norms.pad_factor = nn.at("pad_factor").get<int>();
    c.seed = j.at("seed").get<std::uint64_t>();
    return c;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot read " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return config_from_json(text);
}

std::string validate_config(const RunConfig& c) {
    if (c.d < 1 || c.d > 3) return "1 <= d <= 3";
    if (c.n < 2 || c.n % 2 != 0) return "n even and >= 2";
    if (!(c.L > 0.0)) return "L > 0";
    if (!(c.pot.beta >= 0.0 && c.pot.beta < 1.0)) return "0 <= beta < 1";
    if (!(c.norms.alpha > 0.5)) return "alpha > 1/2";
    if (!(2.0 * c.norms.alpha * c.pot.beta < 1.0)) return "2*alpha*beta < 1";
    if (!(c.norms.beta_prime > c.pot.beta && c.norms.beta_prime < 1.0))
        return "beta < beta_prime < 1";
    if (!(c.norms.xb > 0.0 && c.norms.xb < 0.5)) return "0 < xb < 1/2";
    if (!(c.norms.pad_factor >= 1)) return "pad_factor >= 1";
    if (!(c.T > 0.0 && c.T <= 1.0)) return "0 < T <= 1";
    if (!(c.dt > 0.0 && c.dt <= c.T)) return "0 < dt <= T";
    if (!(c.store_every >= 1)) return "store_every >= 1";
    if (!(c.offset_stride >= 1)) return "offset_stride >= 1";
    if (c.scheme != "strang" && c.scheme != "rk4")
        return "scheme in {strang, rk4}";
    if (c.route != "direct" && c.route != "bracket")
        return "route in {direct, bracket}";
    if (c.Nlist.empty()) return "N list nonempty";
    for (size_t i = 0; i < c.Nlist.size(); ++i) {
        if (!(c.Nlist[i] >= 1.0)) return "N >= 1";
        if (i > 0 && !(c.Nlist[i] > c.Nlist[i - 1]))
            return "N list strictly increasing";
    }
    double nyq = pi * c.n / c.L;
    double nbmax = std::pow(c.Nlist.back(), c.pot.beta);
    if (!(nbmax <= nyq)) return "N^beta <= pi*n/L (resolved regime)";
    return {};
}

std::string config_hash(const RunConfig& c) {
    std::string s = config_to_json(c);
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

Grid config_grid(const RunConfig& c) { return Grid::make(c.d, c.n, c.L); }

Scheme config_scheme(const RunConfig& c) {
    return c.scheme == "rk4" ? Scheme::rk4 : Scheme::strang;
}

RhsRoute config_route(const RunConfig& c) {
    return c.route == "bracket" ? RhsRoute::bracket : RhsRoute::direct;
}

} // namespace hfb
