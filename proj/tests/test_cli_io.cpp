#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "hfb/config.hpp"
#include "hfb/experiments.hpp"
#include "hfb/io.hpp"

namespace fs = std::filesystem;
using namespace hfb;

namespace {

fs::path fresh_dir(const char* name) {
    fs::path d = fs::temp_directory_path() / name;
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
}

std::string slurp_bytes(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

// run the installed front end; stdout/stderr land next to the work dir
int run_cli(const std::string& args, const fs::path& dir,
            std::string* out = nullptr, std::string* err = nullptr) {
    fs::path so = dir / "stdout.txt", se = dir / "stderr.txt";
    std::string cmd = std::string("\"") + HFB_CLI_PATH + "\" " + args + " > " +
                      so.string() + " 2> " + se.string();
    int st = std::system(cmd.c_str());
    REQUIRE(st != -1);
    if (out) *out = slurp_bytes(so);
    if (err) *err = slurp_bytes(se);
    return WEXITSTATUS(st);
}

HFBState random_state(const Grid& g, std::uint64_t seed) {
    Rng rng(seed);
    HFBState s(g, 12.0);
    for (int i = 0; i < g.np; ++i) s.phi[i] = rng.cnormal();
    for (auto& z : s.lambda.a) z = rng.cnormal();
    for (auto& z : s.gamma.a) z = rng.cnormal();
    return s;
}

SpaceTimeTrace small_trace() {
    Grid g = Grid::make(1, 8, pi);
    PotentialSpec ps;
    ps.beta = 0.4;
    ps.N = 4;
    Field vN = sample_vN(g, ps);
    InitRecipe ir;
    HFBState s0 = make_initial(g, 4, ir);
    return record_evolution(s0, vN, 1e-3, 6, Scheme::strang, RhsRoute::direct,
                            default_offsets(g), 2);
}

} // namespace

TEST_CASE("state files round trip bit exactly") {
    fs::path dir = fresh_dir("hfb_t_state");
    Grid g = Grid::make(2, 6, 2.0);
    HFBState s = random_state(g, 31);
    fs::path f1 = dir / "a.bin", f2 = dir / "b.bin";
    save_state(f1.string(), s);
    HFBState t = load_state(f1.string());
    CHECK(t.g.d == g.d);
    CHECK(t.g.n == g.n);
    CHECK(t.g.L == g.L);
    CHECK(t.N == s.N);
    for (int i = 0; i < g.np; ++i) CHECK(t.phi[i] == s.phi[i]);
    for (size_t i = 0; i < s.lambda.a.size(); ++i) {
        CHECK(t.lambda.a[i] == s.lambda.a[i]);
        CHECK(t.gamma.a[i] == s.gamma.a[i]);
    }
    // a second pass through the writer reproduces the file byte for byte
    save_state(f2.string(), t);
    CHECK(slurp_bytes(f1) == slurp_bytes(f2));

    write_text_file((dir / "junk.bin").string(), "not a state file at all");
    CHECK_THROWS_AS(load_state((dir / "junk.bin").string()),
                    std::runtime_error);
    CHECK_THROWS_AS(load_state((dir / "missing.bin").string()),
                    std::runtime_error);
}

TEST_CASE("trace files round trip bit exactly") {
    fs::path dir = fresh_dir("hfb_t_trace");
    SpaceTimeTrace tr = small_trace();
    fs::path f1 = dir / "a.bin", f2 = dir / "b.bin";
    save_trace(f1.string(), tr);
    SpaceTimeTrace u = load_trace(f1.string());
    CHECK(u.g.np == tr.g.np);
    CHECK(u.dt == tr.dt);
    CHECK(u.nt == tr.nt);
    CHECK(u.N == tr.N);
    CHECK(u.kernel_stride == tr.kernel_stride);
    REQUIRE(u.offsets.size() == tr.offsets.size());
    for (size_t w = 0; w < tr.offsets.size(); ++w)
        CHECK(u.offsets[w] == tr.offsets[w]);
    REQUIRE(u.phi.size() == tr.phi.size());
    for (size_t i = 0; i < tr.phi.size(); ++i) CHECK(u.phi[i] == tr.phi[i]);
    REQUIRE(u.lambda_slice.size() == tr.lambda_slice.size());
    for (size_t w = 0; w < tr.lambda_slice.size(); ++w)
        for (size_t i = 0; i < tr.lambda_slice[w].size(); ++i) {
            CHECK(u.lambda_slice[w][i] == tr.lambda_slice[w][i]);
            CHECK(u.gamma_slice[w][i] == tr.gamma_slice[w][i]);
        }
    REQUIRE(u.snaps() == tr.snaps());
    for (int j = 0; j < tr.snaps(); ++j)
        for (size_t i = 0; i < tr.lambda_snap[j].a.size(); ++i) {
            CHECK(u.lambda_snap[j].a[i] == tr.lambda_snap[j].a[i]);
            CHECK(u.gamma_snap[j].a[i] == tr.gamma_snap[j].a[i]);
        }
    save_trace(f2.string(), u);
    CHECK(slurp_bytes(f1) == slurp_bytes(f2));

    // norms computed before and after the round trip agree exactly
    NormConfig nc;
    NormReport a = composite_norms(tr, nc);
    NormReport b = composite_norms(u, nc);
    CHECK(a.csv() == b.csv());
}

TEST_CASE("config json round trips and the hash is canonical") {
    RunConfig c = default_config();
    c.n = 24;
    c.Nlist = {8, 32};
    c.scheme = "rk4";
    c.seed = 77;
    std::string js = config_to_json(c);
    RunConfig d = config_from_json(js);
    CHECK(config_to_json(d) == js);
    CHECK(d.n == 24);
    REQUIRE(d.Nlist.size() == 2);
    CHECK(d.Nlist[1] == 32.0);
    CHECK(d.scheme == "rk4");
    CHECK(d.seed == 77);

    std::string h = config_hash(c);
    CHECK(h.size() == 16);
    for (char ch : h) CHECK(std::isxdigit(static_cast<unsigned char>(ch)));
    CHECK(config_hash(c) == h); // stable across calls
    RunConfig e = c;
    e.seed = 78;
    CHECK(config_hash(e) != h); // and sensitive to any field

    // a scalar N is accepted and promoted to a one-entry list
    RunConfig f = config_from_json(R"({"version":1,
        "grid":{"d":1,"n":16,"L":3.14},
        "potential":{"profile":"bump","amplitude":1.0,"beta":0.5,"N":64},
        "initial":{"phi_amp":0.6,"phi_width":0.18,"exc_sigma":0.5,
                   "exc_width":0.12},
        "scheme":{"method":"strang","route":"direct","dt":1e-3,"T":0.25,
                  "store_every":5,"offset_stride":1},
        "norms":{"alpha":0.75,"xb":0.48,"delta":0.02,"beta_prime":0.9,
                 "pad_factor":4},
        "seed":1})");
    REQUIRE(f.Nlist.size() == 1);
    CHECK(f.Nlist[0] == 64.0);

    RunConfig bad = c;
    bad.version = 2;
    CHECK_THROWS_AS(config_from_json(config_to_json(bad)), std::runtime_error);
    CHECK_THROWS(config_from_json("{\"version\":1}")); // missing sections
    CHECK_THROWS(config_from_json("not json"));
}

TEST_CASE("validation names the violated inequality") {
    CHECK(validate_config(default_config()).empty());

    RunConfig c = default_config();
    c.norms.alpha = 0.4;
    CHECK(validate_config(c) == "alpha > 1/2");

    c = default_config();
    c.norms.beta_prime = 0.3;
    CHECK(validate_config(c) == "beta < beta_prime < 1");

    c = default_config();
    c.pot.beta = 0.8;
    CHECK(validate_config(c) == "2*alpha*beta < 1");

    c = default_config();
    c.pot.beta = 0.8;
    c.norms.alpha = 0.55;
    c.n = 16;
    c.Nlist = {4096};
    CHECK(validate_config(c) == "N^beta <= pi*n/L (resolved regime)");

    c = default_config();
    c.scheme = "euler";
    CHECK(validate_config(c) == "scheme in {strang, rk4}");

    c = default_config();
    c.Nlist = {16, 8};
    CHECK(validate_config(c) == "N list strictly increasing");

    c = default_config();
    c.dt = 2.0 * c.T;
    CHECK(validate_config(c) == "0 < dt <= T");

    c = default_config();
    c.n = 15;
    CHECK(validate_config(c) == "n even and >= 2");
}

TEST_CASE("cli: validate-config, unknown subcommand, invalid config") {
    fs::path dir = fresh_dir("hfb_t_cli1");
    std::string out, err;

    int rc = run_cli("validate-config", dir, &out, &err);
    CHECK(rc == 0);
    CHECK(out.find("config ok, hash ") == 0);
    CHECK(out.find(config_hash(default_config())) != std::string::npos);

    rc = run_cli("frobnicate", dir, &out, &err);
    CHECK(rc == 2);

    RunConfig bad = default_config();
    bad.norms.alpha = 0.1;
    fs::path cfg = dir / "bad.json";
    write_text_file(cfg.string(), config_to_json(bad));
    rc = run_cli("--config " + cfg.string() + " validate-config", dir, &out,
                 &err);
    CHECK(rc == 1);
    CHECK(err.find("alpha > 1/2") != std::string::npos);
}

TEST_CASE("cli: simulate writes the run directory and reruns byte identical") {
    fs::path dir = fresh_dir("hfb_t_cli2");
    RunConfig c = default_config();
    c.n = 16;
    c.pot.beta = 0.5;
    c.Nlist = {8};
    c.T = 0.02;
    c.dt = 2e-3;
    c.store_every = 2;
    c.offset_stride = 4;
    fs::path cfg = dir / "cfg.json";
    write_text_file(cfg.string(), config_to_json(c));
    std::string hash = config_hash(c);

    std::string out, err;
    fs::path outa = dir / "runs_a", outb = dir / "runs_b";
    int rc = run_cli("--config " + cfg.string() + " --out " + outa.string() +
                         " simulate",
                     dir, &out, &err);
    INFO(err);
    REQUIRE(rc == 0);
    fs::path run = outa / ("sim-" + hash);
    CHECK(out.find(run.string()) != std::string::npos);
    REQUIRE(fs::exists(run));
    CHECK(read_text_file((run / "config.json").string()) == config_to_json(c));
    std::string cons = read_text_file((run / "conserved.csv").string());
    CHECK(cons.rfind("t,mass,energy,kinetic,e_lambda,e_gamma,e_diag,e_cond\n",
                     0) == 0);
    HFBState sf = load_state((run / "state_final.bin").string());
    CHECK(sf.g.n == 16);
    SpaceTimeTrace tr = load_trace((run / "trace.bin").string());
    CHECK(tr.nt == 10);
    std::string norms = read_text_file((run / "norms.csv").string());
    CHECK_FALSE(norms.empty());

    // a second run of the same configuration is byte identical
    rc = run_cli("--config " + cfg.string() + " --out " + outb.string() +
                     " simulate",
                 dir, &out, &err);
    REQUIRE(rc == 0);
    fs::path run2 = outb / ("sim-" + hash);
    for (const char* f :
         {"config.json", "conserved.csv", "trace.bin", "state_final.bin",
          "norms.csv"})
        CHECK(slurp_bytes(run / f) == slurp_bytes(run2 / f));

    // the norms subcommand reproduces the simulate-side norm report
    rc = run_cli("--config " + cfg.string() + " --out " + outb.string() +
                     " norms " + (run / "trace.bin").string(),
                 dir, &out, &err);
    REQUIRE(rc == 0);
    CHECK(out.find(norms) != std::string::npos);
}

TEST_CASE("cli: a blowing-up evolution aborts with exit 3") {
    fs::path dir = fresh_dir("hfb_t_cli3");
    RunConfig c = default_config();
    c.n = 16;
    c.pot.beta = 0.5;
    c.pot.amplitude = 1e80; // absurd coupling: rk4 leaves double range fast
    c.Nlist = {8};
    c.scheme = "rk4";
    c.T = 0.02;
    c.dt = 2e-3;
    c.store_every = 1;
    c.offset_stride = 4;
    fs::path cfg = dir / "cfg.json";
    write_text_file(cfg.string(), config_to_json(c));
    std::string out, err;
    int rc = run_cli("--config " + cfg.string() + " --out " +
                         (dir / "runs").string() + " simulate",
                     dir, &out, &err);
    CHECK(rc == 3);
    CHECK(err.find("non-finite") != std::string::npos);
    // the partial trace is still written and loadable
    fs::path run = dir / "runs" / ("sim-" + config_hash(c));
    SpaceTimeTrace tr = load_trace((run / "trace.bin").string());
    CHECK(tr.nt >= 1);
}
