// plcsnet: power-law classification of time-series pairs and networks on
// the percolation threshold.
//
//   plcsnet analyze --input panel.csv --window 2002:2011 --out out/
//   plcsnet npt     --input panel.csv --window 2002:2011 --preference cp,sp,s
//   plcsnet mst     --input panel.csv --window 2002:2011
//   plcsnet synth   --seed 7 --out out/

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "plcsnet/cli.hpp"
#include "plcsnet/error.hpp"
#include "plcsnet/kernels.hpp"

namespace {

struct Flags {
    std::string config;
    std::string input;
    std::string window;
    std::string tail;
    std::string ud_variant;
    std::string preference;
    std::string formats;
    std::string out;
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::size_t hubs = 0;
    double min_md = 0.0;
    std::string sigmas;
    std::size_t trials = 0;
    std::size_t length = 0;
    double offset = 0.0;
    std::string targets;
    std::string synth_tail;
};

void add_common(CLI::App& cmd, Flags& f) {
    cmd.add_option("--config", f.config, "JSON config file; flags override its keys");
    cmd.add_option("--out", f.out, "Output directory");
    cmd.add_option("--seed", f.seed, "Seed for synthetic data");
    cmd.add_option("--threads", f.threads, "Worker threads for the pair matrix (0 = all cores)");
    cmd.add_option("--tail", f.tail, "Log-log tail points used in the fit, or 'all'");
    cmd.add_option("--min-md", f.min_md, "Cumulative MD at or below this is treated as zero");
}

void add_panel(CLI::App& cmd, Flags& f) {
    cmd.add_option("--input", f.input, "Wide CSV panel: period,E1,E2,...");
    cmd.add_option("--window", f.window, "Inclusive period window START:END (default: whole panel)");
    cmd.add_option("--ud-variant", f.ud_variant, "Ultrametric distance normalization: am or ms");
    cmd.add_option("--formats", f.formats, "Comma list: matrix-csv,pairs-json,dot,graphml,loglog-csv");
    cmd.add_option("--hubs", f.hubs, "Number of hubs listed in summaries");
}

bool given(const CLI::App& cmd, const std::string& name) {
    try {
        return cmd.get_option(name)->count() > 0;
    } catch (const CLI::OptionNotFound&) {
        return false;
    }
}

plcsnet::cli::RunConfig build_config(const CLI::App& cmd, const Flags& f) {
    using namespace plcsnet::cli;
    RunConfig cfg;
    if (!f.config.empty()) {
        std::ifstream in(f.config);
        if (!in) throw plcsnet::IoError("cannot open config " + f.config);
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw plcsnet::ParseError("config " + f.config + ": " + e.what());
        }
        apply_config_json(j, cfg);
    }
    if (given(cmd, "--input")) cfg.input = f.input;
    if (given(cmd, "--window")) cfg.window = plcsnet::AnalysisWindow::parse(f.window);
    if (given(cmd, "--tail")) cfg.plcs.tail_points = parse_tail(f.tail);
    if (given(cmd, "--min-md")) cfg.plcs.min_md = f.min_md;
    if (given(cmd, "--ud-variant")) cfg.ud_variant = plcsnet::parse_ud_variant(f.ud_variant);
    if (given(cmd, "--preference")) cfg.preferences = parse_preferences(f.preference);
    if (given(cmd, "--formats")) cfg.formats = parse_formats(f.formats);
    if (given(cmd, "--out")) cfg.out_dir = f.out;
    if (given(cmd, "--seed")) cfg.seed = f.seed;
    if (given(cmd, "--threads")) cfg.threads = f.threads;
    if (given(cmd, "--hubs")) cfg.hub_count = f.hubs;
    if (given(cmd, "--sigmas")) cfg.sigma_fractions = parse_number_list(f.sigmas);
    if (given(cmd, "--trials")) cfg.trials = f.trials;
    if (given(cmd, "--length")) cfg.synth_length = f.length;
    if (given(cmd, "--offset")) cfg.synth_offset = f.offset;
    if (given(cmd, "--targets")) cfg.gamma_targets = parse_number_list(f.targets);
    if (given(cmd, "--synth-tail")) cfg.synth_tail = parse_tail(f.synth_tail);
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    using namespace plcsnet::cli;
    CLI::App app{"Power-law classification of time-series correlations and percolation-threshold networks"};
    app.require_subcommand(1);
    bool verbose = false;
    app.add_flag("-v,--verbose", verbose, "Print written files and the active SIMD kernel set");

    Flags f;
    auto* analyze = app.add_subcommand("analyze", "Gamma, beta and UD matrices plus per-pair fits");
    add_common(*analyze, f);
    add_panel(*analyze, f);

    auto* npt = app.add_subcommand("npt", "Networks on the percolation threshold, one per preference");
    add_common(*npt, f);
    add_panel(*npt, f);
    npt->add_option("--preference", f.preference, "Comma list of cp, sp, s, ud");

    auto* mst = app.add_subcommand("mst", "Minimum spanning tree of the UD matrix");
    add_common(*mst, f);
    add_panel(*mst, f);

    auto* synth = app.add_subcommand("synth", "Synthetic recovery table and noise-robustness report");
    add_common(*synth, f);
    synth->add_option("--sigmas", f.sigmas, "Noise levels as fractions of the base series range");
    synth->add_option("--trials", f.trials, "Trials per noise level (>= 10)");
    synth->add_option("--length", f.length, "Synthetic series length");
    synth->add_option("--offset", f.offset, "Constant offset c between the paired series");
    synth->add_option("--targets", f.targets, "Comma list of PowerLawGap gamma targets");
    synth->add_option("--synth-tail", f.synth_tail, "Tail points for the robustness fits, or 'all'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_codes::kOk : exit_codes::kUsage;
    }

    try {
        CLI::App* cmd = app.get_subcommands().front();
        const RunConfig cfg = build_config(*cmd, f);
        CommandResult result;
        if (cmd == analyze) result = cmd_analyze(cfg);
        else if (cmd == npt) result = cmd_npt(cfg);
        else if (cmd == mst) result = cmd_mst(cfg);
        else result = cmd_synth(cfg);
        if (verbose) {
            std::cerr << "kernels: " << plcsnet::kernels::isa_name(plcsnet::kernels::active_isa()) << '\n';
            for (const auto& p : result.files) std::cout << p.string() << '\n';
        }
        return exit_codes::kOk;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    }
}
