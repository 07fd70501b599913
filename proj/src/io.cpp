#include "hfb/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hfb {

namespace {

constexpr std::uint32_t kStateMagic = 0x48464231; // "HFB1"
constexpr std::uint32_t kTraceMagic = 0x48465432; // "HFT2"

void put_u32(std::ostream& o, std::uint32_t v) {
    o.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void put_u64(std::ostream& o, std::uint64_t v) {
    o.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void put_f64(std::ostream& o, double v) {
    o.write(reinterpret_cast<const char*>(&v), sizeof v);
}
void put_cvec(std::ostream& o, const std::vector<cplx>& v) {
    o.write(reinterpret_cast<const char*>(v.data()),
            static_cast<std::streamsize>(v.size() * sizeof(cplx)));
}

std::uint32_t get_u32(std::istream& i) {
    std::uint32_t v = 0;
    i.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
std::uint64_t get_u64(std::istream& i) {
    std::uint64_t v = 0;
    i.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
double get_f64(std::istream& i) {
    double v = 0;
    i.read(reinterpret_cast<char*>(&v), sizeof v);
    return v;
}
void get_cvec(std::istream& i, std::vector<cplx>& v, size_t count) {
    v.resize(count);
    i.read(reinterpret_cast<char*>(v.data()),
           static_cast<std::streamsize>(count * sizeof(cplx)));
}

std::ofstream open_out(const std::string& path) {
    std::ofstream o(path, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("io: cannot write " + path);
    return o;
}

std::ifstream open_in(const std::string& path) {
    std::ifstream i(path, std::ios::binary);
    if (!i) throw std::runtime_error("io: cannot read " + path);
    return i;
}

void put_grid(std::ostream& o, const Grid& g) {
    put_u32(o, static_cast<std::uint32_t>(g.d));
    put_u32(o, static_cast<std::uint32_t>(g.n));
    put_f64(o, g.L);
}

Grid get_grid(std::istream& i) {
    int d = static_cast<int>(get_u32(i));
    int n = static_cast<int>(get_u32(i));
    double L = get_f64(i);
    return Grid::make(d, n, L);
}

} // namespace

void save_state(const std::string& path, const HFBState& s) {
    auto o = open_out(path);
    put_u32(o, kStateMagic);
    put_u32(o, 1); // format version
    put_grid(o, s.g);
    put_f64(o, s.N);
    put_cvec(o, s.phi.a);
    put_cvec(o, s.lambda.a);
    put_cvec(o, s.gamma.a);
    if (!o) throw std::runtime_error("io: short write to " + path);
}

HFBState load_state(const std::string& path) {
    auto i = open_in(path);
    if (get_u32(i) != kStateMagic)
        throw std::runtime_error("io: bad state magic in " + path);
    if (get_u32(i) != 1)
        throw std::runtime_error("io: unknown state version in " + path);
    Grid g = get_grid(i);
    double N = get_f64(i);
    HFBState s(g, N);
    get_cvec(i, s.phi.a, static_cast<size_t>(g.np));
    get_cvec(i, s.lambda.a, static_cast<size_t>(g.np) * g.np);
    get_cvec(i, s.gamma.a, static_cast<size_t>(g.np) * g.np);
    if (!i) throw std::runtime_error("io: short read from " + path);
    return s;
}

void save_trace(const std::string& path, const SpaceTimeTrace& tr) {
    auto o = open_out(path);
    put_u32(o, kTraceMagic);
    put_u32(o, 1);
    put_grid(o, tr.g);
    put_f64(o, tr.dt);
    put_u32(o, static_cast<std::uint32_t>(tr.nt));
    put_f64(o, tr.N);
    put_u32(o, static_cast<std::uint32_t>(tr.kernel_stride));
    put_u64(o, tr.offsets.size());
    for (const auto& w : tr.offsets)
        for (int a = 0; a < 3; ++a)
            put_u32(o, static_cast<std::uint32_t>(w[a] & 0xffffffffu));
    put_cvec(o, tr.phi);
    for (const auto& s : tr.lambda_slice) put_cvec(o, s);
    for (const auto& s : tr.gamma_slice) put_cvec(o, s);
    put_u64(o, tr.lambda_snap.size());
    for (const auto& k : tr.lambda_snap) put_cvec(o, k.a);
    for (const auto& k : tr.gamma_snap) put_cvec(o, k.a);
    if (!o) throw std::runtime_error("io: short write to " + path);
}

SpaceTimeTrace load_trace(const std::string& path) {
    auto i = open_in(path);
    if (get_u32(i) != kTraceMagic)
        throw std::runtime_error("io: bad trace magic in " + path);
    if (get_u32(i) != 1)
        throw std::runtime_error("io: unknown trace version in " + path);
    SpaceTimeTrace tr;
    tr.g = get_grid(i);
    tr.dt = get_f64(i);
    tr.nt = static_cast<int>(get_u32(i));
    tr.N = get_f64(i);
    tr.kernel_stride = static_cast<int>(get_u32(i));
    size_t nw = get_u64(i);
    tr.offsets.resize(nw);
    for (auto& w : tr.offsets)
        for (int a = 0; a < 3; ++a)
            w[a] = static_cast<std::int32_t>(get_u32(i));
    size_t len = static_cast<size_t>(tr.nt) * tr.g.np;
    get_cvec(i, tr.phi, len);
    tr.lambda_slice.resize(nw);
    tr.gamma_slice.resize(nw);
    for (auto& s : tr.lambda_slice) get_cvec(i, s, len);
    for (auto& s : tr.gamma_slice) get_cvec(i, s, len);
    size_t ns = get_u64(i);
    size_t klen = static_cast<size_t>(tr.g.np) * tr.g.np;
    tr.lambda_snap.assign(ns, Kernel(tr.g));
    tr.gamma_snap.assign(ns, Kernel(tr.g));
    for (auto& k : tr.lambda_snap) get_cvec(i, k.a, klen);
    for (auto& k : tr.gamma_snap) get_cvec(i, k.a, klen);
    if (!i) throw std::runtime_error("io: short read from " + path);
    return tr;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream o(path, std::ios::binary | std::ios::trunc);
    if (!o) throw std::runtime_error("io: cannot write " + path);
    o << content;
}

std::string read_text_file(const std::string& path) {
    auto i = open_in(path);
    std::string s((std::istreambuf_iterator<char>(i)),
                  std::istreambuf_iterator<char>());
    return s;
}

std::string conserved_csv(const std::vector<ConservedReport>& series,
                          double dt_between) {
    std::string out =
        "t,mass,energy,kinetic,e_lambda,e_gamma,e_diag,e_cond\n";
    char line[256];
    for (size_t i = 0; i < series.size(); ++i) {
        const ConservedReport& r = series[i];
        std::snprintf(line, sizeof line,
                      "%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                      dt_between * i, r.mass, r.energy, r.kinetic, r.e_lambda,
                      r.e_gamma, r.e_diag, r.e_cond);
        out += line;
    }
    return out;
}

} // namespace hfb
