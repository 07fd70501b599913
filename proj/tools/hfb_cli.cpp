// hfb_cli: command-line front end.
//   simulate        evolve one configuration, write trace + CSV + snapshots
//   sweep           N-sweep with norm reports and summary ratios
//   verify LEMMA    run one estimate verifier (duhamel, strichartz,
//                   quartertime, sobolev-angle, mlogm)
//   oracle          cross-implementation residual ledger
//   norms TRACE     recompute the composite norms of a saved trace
//   validate-config check a configuration and name any violated inequality
// All artifacts land in <out>/<subcommand>-<config hash>/ and contain no
// wall-clock data, so reruns are byte identical.
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "hfb/config.hpp"
#include "hfb/io.hpp"

namespace fs = std::filesystem;
using namespace hfb;

namespace {

struct CliState {
    std::string config_path;
    std::string outdir = "runs";
    std::uint64_t seed = 0;
    bool seed_set = false;
    int threads = 0;
    bool serial = false;
};

RunConfig effective_config(const CliState& st) {
    RunConfig c = st.config_path.empty() ? default_config()
                                         : load_config(st.config_path);
    if (st.seed_set) c.seed = st.seed;
    return c;
}

int reject_invalid(const RunConfig& c) {
    std::string bad = validate_config(c);
    if (bad.empty()) return 0;
    std::cerr << "invalid config: violates " << bad << "\n";
    return 1;
}

fs::path make_run_dir(const CliState& st, const RunConfig& c,
                      const std::string& kind) {
    fs::path dir = fs::path(st.outdir) / (kind + "-" + config_hash(c));
    fs::create_directories(dir);
    write_text_file((dir / "config.json").string(), config_to_json(c));
    return dir;
}

int cmd_simulate(const CliState& st) {
    RunConfig c = effective_config(st);
    if (int rc = reject_invalid(c)) return rc;
    fs::path dir = make_run_dir(st, c, "sim");

    Grid g = config_grid(c);
    PotentialSpec ps = c.pot;
    ps.N = c.Nlist.front();
    Field vN = sample_vN(g, ps);
    HFBState s0 = make_initial(g, ps.N, c.init);

    auto all = default_offsets(g);
    std::vector<std::array<int, 3>> offsets;
    for (size_t i = 0; i < all.size(); i += c.offset_stride)
        offsets.push_back(all[i]);
    int nsteps = static_cast<int>(std::lround(c.T / c.dt));

    SpaceTimeTrace tr =
        record_evolution(s0, vN, c.dt, nsteps, config_scheme(c),
                         config_route(c), offsets, c.store_every);
    bool aborted = tr.nan_abort;
    int good = tr.recorded;
    if (aborted) tr = truncate_trace(tr, good); // drops the abort flag

    std::vector<ConservedReport> cons;
    for (int i = 0; i < tr.snaps(); ++i) {
        HFBState s(g, ps.N);
        int j = i * c.store_every;
        for (int x = 0; x < g.np; ++x)
            s.phi[x] = tr.phi[static_cast<size_t>(j) * g.np + x];
        s.lambda = tr.lambda_snap[i];
        s.gamma = tr.gamma_snap[i];
        cons.push_back(conserved_report(s, vN));
        if (i + 1 == tr.snaps())
            save_state((dir / "state_final.bin").string(), s);
    }
    write_text_file((dir / "conserved.csv").string(),
                    conserved_csv(cons, c.dt * c.store_every));
    save_trace((dir / "trace.bin").string(), tr);
    if (aborted) {
        std::cerr << "evolution hit a non-finite value after " << good
                  << " samples; partial outputs in " << dir << "\n";
        return 3;
    }
    NormReport rep = composite_norms(tr, c.norms);
    write_text_file((dir / "norms.csv").string(), rep.csv());
    std::cout << dir.string() << "\n";
    return 0;
}

int cmd_sweep(const CliState& st) {
    RunConfig c = effective_config(st);
    if (int rc = reject_invalid(c)) return rc;
    fs::path dir = make_run_dir(st, c, "sweep");

    SweepConfig sc;
    sc.g = config_grid(c);
    sc.pot = c.pot;
    sc.Nlist = c.Nlist;
    sc.T = c.T;
    sc.dt = c.dt;
    sc.store_every = c.store_every;
    sc.offset_stride = c.offset_stride;
    sc.init = c.init;
    sc.norms = c.norms;
    sc.scheme = config_scheme(c);
    SweepReport rep = n_sweep(sc);

    write_text_file((dir / "sweep.csv").string(), rep.csv());
    std::string summary = "name,max_over_min,loglog_slope\n";
    char line[192];
    for (size_t i = 0; i < rep.ratios.size(); ++i) {
        std::snprintf(line, sizeof line, "%s,%.17g,%.17g\n",
                      rep.ratios[i].first.c_str(), rep.ratios[i].second,
                      rep.slopes[i].second);
        summary += line;
    }
    for (const auto& e : rep.entries)
        if (e.failed)
            summary += "# N=" + std::to_string(e.N) + " failed: " + e.error +
                       "\n";
    write_text_file((dir / "summary.csv").string(), summary);
    std::cout << dir.string() << "\n";
    return 0;
}

int cmd_verify(const CliState& st, const std::string& lemma, int ensemble,
               double b, double delta, double p) {
    RunConfig c = effective_config(st);
    if (int rc = reject_invalid(c)) return rc;
    LemmaCheck chk;
    try {
        if (lemma == "duhamel") {
            chk = verify_duhamel(b, ensemble, c.seed);
        } else if (lemma == "strichartz") {
            chk = verify_strichartz(delta, p, strichartz_admissible_q(delta, p),
                                    ensemble, c.seed);
        } else if (lemma == "quartertime") {
            chk = verify_quartertime(ensemble, c.seed, c.norms.alpha);
        } else if (lemma == "sobolev-angle") {
            chk = verify_sobolev_angle(ensemble, c.seed);
        } else if (lemma == "mlogm") {
            // the A ladder shadows -M^2/2 so the sup over A is comparable
            // at every level
            chk = verify_mlogm({2, 4, 8, 16, 32, 64},
                               {0, -1, -2, -8, -32, -128, -512, -2048});
        } else {
            std::cerr << "unknown lemma id: " << lemma << "\n";
            return 2;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return 1;
    }
    fs::path dir = make_run_dir(st, c, "verify-" + lemma);
    write_text_file((dir / (lemma + ".csv")).string(), chk.csv());
    write_text_file((dir / (lemma + ".json")).string(), chk.json() + "\n");
    std::printf("%s: max ratio %.6g, trend slope %.3f\n", chk.id.c_str(),
                chk.max_ratio, chk.trend_slope);
    std::cout << dir.string() << "\n";
    return 0;
}

int cmd_oracle(const CliState& st) {
    RunConfig c = effective_config(st);
    OracleLedger led = oracle_suite(c.seed);
    fs::path dir = make_run_dir(st, c, "oracle");
    write_text_file((dir / "oracle.txt").string(), led.text());
    std::cout << led.text();
    return led.all_pass() ? 0 : 1;
}

int cmd_norms(const CliState& st, const std::string& trace_path) {
    RunConfig c = effective_config(st);
    if (int rc = reject_invalid(c)) return rc;
    SpaceTimeTrace tr = load_trace(trace_path);
    NormReport rep = composite_norms(tr, c.norms);
    fs::path dir = make_run_dir(st, c, "norms");
    write_text_file((dir / "norms.csv").string(), rep.csv());
    std::cout << rep.csv();
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"spectral simulator and estimate harness for the "
                 "pair-excitation mean-field system"};
    app.require_subcommand(1);
    CliState st;
    app.add_option("--config", st.config_path, "JSON config path");
    app.add_option("--out", st.outdir, "output directory root");
    auto* seed_opt = app.add_option("--seed", st.seed, "override the rng seed");
    app.add_option("--threads", st.threads, "worker thread count");
    app.add_flag("--serial", st.serial, "force single-threaded kernels");

    auto* sub_validate = app.add_subcommand("validate-config",
                                            "check the configuration");
    auto* sub_sim = app.add_subcommand("simulate", "evolve one configuration");
    auto* sub_sweep = app.add_subcommand("sweep", "N-sweep with norm reports");
    auto* sub_verify = app.add_subcommand("verify", "run an estimate verifier");
    std::string lemma;
    int ensemble = 40;
    double vb = 0.45, vdelta = 0.4, vp = 4.0;
    sub_verify->add_option("lemma", lemma, "lemma id")->required();
    sub_verify->add_option("--ensemble", ensemble, "sample count");
    sub_verify->add_option("--b", vb, "exponent for duhamel");
    sub_verify->add_option("--delta", vdelta, "exponent for strichartz");
    sub_verify->add_option("--p", vp, "time exponent for strichartz");
    auto* sub_oracle = app.add_subcommand("oracle", "cross-check ledger");
    auto* sub_norms = app.add_subcommand("norms", "norms of a saved trace");
    std::string trace_path;
    sub_norms->add_option("trace", trace_path, "trace.bin path")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << app.help();
        return 2;
    }
    st.seed_set = seed_opt->count() > 0;
    if (st.serial)
        par::set_threads(1);
    else if (st.threads > 0)
        par::set_threads(st.threads);

    try {
        if (sub_validate->parsed()) {
            RunConfig c = effective_config(st);
            int rc = reject_invalid(c);
            if (rc == 0) std::cout << "config ok, hash " << config_hash(c)
                                   << "\n";
            return rc;
        }
        if (sub_sim->parsed()) return cmd_simulate(st);
        if (sub_sweep->parsed()) return cmd_sweep(st);
        if (sub_verify->parsed())
            return cmd_verify(st, lemma, ensemble, vb, vdelta, vp);
        if (sub_oracle->parsed()) return cmd_oracle(st);
        if (sub_norms->parsed()) return cmd_norms(st, trace_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
