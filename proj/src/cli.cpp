#include "plcsnet/cli.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "plcsnet/error.hpp"
#include "plcsnet/format.hpp"
#include "plcsnet/io.hpp"
#include "plcsnet/pair_matrix.hpp"
#include "plcsnet/synth.hpp"

namespace plcsnet::cli {

namespace {

std::vector<std::string> split_list(const std::string& list) {
    std::vector<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        while (!item.empty() && item.front() == ' ') item.erase(item.begin());
        while (!item.empty() && item.back() == ' ') item.pop_back();
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

struct Prepared {
    SeriesPanel panel;
    AnalysisWindow window;
};

Prepared prepare(const RunConfig& cfg) {
    cfg.validate();
    if (cfg.input.empty()) throw ContractError("no input panel given (--input)");
    const SeriesPanel full = load_panel_file(cfg.input.string());
    const AnalysisWindow w = cfg.window.value_or(AnalysisWindow{full.first_period(), full.last_period()});
    return {window_panel(full, w), w};
}

std::string window_text(const AnalysisWindow& w) {
    return std::to_string(w.start_period) + ":" + std::to_string(w.end_period);
}

template <class Writer>
std::filesystem::path emit(const RunConfig& cfg, const std::string& name, Writer&& writer) {
    std::ostringstream text;
    writer(text);
    const auto path = cfg.out_dir / name;
    io::write_file_atomic(path, text.str());
    return path;
}

bool wants(const RunConfig& cfg, OutputFormat f) { return cfg.formats.count(f) > 0; }

PairMatrix full_matrix(const RunConfig& cfg, const SeriesPanel& panel) {
    return PairMatrix::merge(plcs_matrix(panel, cfg.plcs, cfg.threads),
                             ud_matrix(panel, cfg.ud_variant, cfg.threads));
}

}  // namespace

std::string_view format_name(OutputFormat f) {
    switch (f) {
        case OutputFormat::MatrixCsv: return "matrix-csv";
        case OutputFormat::PairsJson: return "pairs-json";
        case OutputFormat::Dot: return "dot";
        case OutputFormat::GraphMl: return "graphml";
        case OutputFormat::LoglogCsv: return "loglog-csv";
    }
    return "unknown";
}

std::set<OutputFormat> parse_formats(const std::string& list) {
    std::set<OutputFormat> out;
    for (const auto& item : split_list(list)) {
        bool matched = false;
        for (auto f : {OutputFormat::MatrixCsv, OutputFormat::PairsJson, OutputFormat::Dot,
                       OutputFormat::GraphMl, OutputFormat::LoglogCsv}) {
            if (format_name(f) == item) {
                out.insert(f);
                matched = true;
            }
        }
        if (!matched) throw ContractError("unknown output format '" + item + "'");
    }
    if (out.empty()) throw ContractError("at least one output format is required");
    return out;
}

std::vector<Preference> parse_preferences(const std::string& list) {
    std::vector<Preference> out;
    for (const auto& item : split_list(list)) {
        const Preference p = parse_preference(item);
        if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
    }
    if (out.empty()) throw ContractError("at least one preference is required");
    return out;
}

std::vector<double> parse_number_list(const std::string& list) {
    std::vector<double> out;
    for (const auto& item : split_list(list)) {
        char* end = nullptr;
        const double v = std::strtod(item.c_str(), &end);
        if (end != item.c_str() + item.size()) throw ContractError("malformed number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::optional<std::size_t> parse_tail(const std::string& text) {
    if (text == "all") return std::nullopt;
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || v < 3) {
        throw ContractError("tail must be 'all' or an integer >= 3, got '" + text + "'");
    }
    return v;
}

void RunConfig::validate() const {
    if (formats.empty()) throw ContractError("at least one output format is required");
    if (preferences.empty()) throw ContractError("at least one preference is required");
    if (window) window->validate();
    plcs.validate();
    if (hub_count == 0) throw ContractError("hubs must be >= 1");
}

void apply_config_json(const nlohmann::json& j, RunConfig& cfg) {
    if (!j.is_object()) throw ContractError("config file must hold a JSON object");
    try {
        for (const auto& [key, value] : j.items()) {
            if (key == "input") {
                cfg.input = value.get<std::string>();
            } else if (key == "window") {
                cfg.window = AnalysisWindow::parse(value.get<std::string>());
            } else if (key == "tail") {
                cfg.plcs.tail_points = value.is_string() ? parse_tail(value.get<std::string>())
                                                         : parse_tail(std::to_string(value.get<std::size_t>()));
            } else if (key == "ud-variant") {
                cfg.ud_variant = parse_ud_variant(value.get<std::string>());
            } else if (key == "preference") {
                cfg.preferences = parse_preferences(value.get<std::string>());
            } else if (key == "formats") {
                cfg.formats = parse_formats(value.get<std::string>());
            } else if (key == "out") {
                cfg.out_dir = value.get<std::string>();
            } else if (key == "seed") {
                cfg.seed = value.get<std::uint64_t>();
            } else if (key == "threads") {
                cfg.threads = value.get<unsigned>();
            } else if (key == "hubs") {
                cfg.hub_count = value.get<std::size_t>();
            } else if (key == "min-md") {
                cfg.plcs.min_md = value.get<double>();
            } else if (key == "sigmas") {
                cfg.sigma_fractions = parse_number_list(value.get<std::string>());
            } else if (key == "trials") {
                cfg.trials = value.get<std::size_t>();
            } else if (key == "length") {
                cfg.synth_length = value.get<std::size_t>();
            } else if (key == "offset") {
                cfg.synth_offset = value.get<double>();
            } else if (key == "targets") {
                cfg.gamma_targets = parse_number_list(value.get<std::string>());
            } else if (key == "synth-tail") {
                cfg.synth_tail = value.is_string() ? parse_tail(value.get<std::string>())
                                                   : parse_tail(std::to_string(value.get<std::size_t>()));
            } else {
                throw ContractError("unknown config key '" + key + "'");
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ContractError(std::string("config file: ") + e.what());
    }
}

CommandResult cmd_analyze(const RunConfig& cfg) {
    const Prepared in = prepare(cfg);
    const PairMatrix m = full_matrix(cfg, in.panel);
    const std::string tag = in.window.tag();
    CommandResult result;
    if (wants(cfg, OutputFormat::MatrixCsv)) {
        for (auto ch : {Channel::Gamma, Channel::Beta, Channel::Ud}) {
            result.files.push_back(emit(cfg, std::string(channel_name(ch)) + "-" + tag + ".csv",
                                        [&](std::ostream& o) { io::write_matrix_csv(m, ch, o); }));
        }
    }
    if (wants(cfg, OutputFormat::PairsJson)) {
        const io::AnalysisMeta meta{in.window, cfg.plcs, cfg.ud_variant};
        result.files.push_back(emit(cfg, "pairs-" + tag + ".json",
                                    [&](std::ostream& o) { io::write_pairs_json(m, meta, o); }));
    }
    if (wants(cfg, OutputFormat::LoglogCsv)) {
        result.files.push_back(emit(cfg, "loglog-" + tag + ".csv",
                                    [&](std::ostream& o) { io::write_loglog_csv(in.panel, cfg.plcs, o); }));
    }
    return result;
}

CommandResult cmd_npt(const RunConfig& cfg) {
    const Prepared in = prepare(cfg);
    const PairMatrix m = full_matrix(cfg, in.panel);
    const std::string tag = in.window.tag();
    CommandResult result;
    for (Preference p : cfg.preferences) {
        const PreferenceRule rule = preference_rule(p);
        const ThresholdNetwork net = npt(build_graph(m, rule.channel), p);
        const std::string base = std::string(preference_tag(p)) + "-" + tag;
        const io::GraphLabel label{base, std::string(preference_tag(p)), std::string(channel_name(rule.channel)),
                                   window_text(in.window)};
        if (wants(cfg, OutputFormat::Dot)) {
            result.files.push_back(emit(cfg, base + ".dot", [&](std::ostream& o) { io::write_dot(net.graph, label, o); }));
        }
        if (wants(cfg, OutputFormat::GraphMl)) {
            result.files.push_back(
                emit(cfg, base + ".graphml", [&](std::ostream& o) { io::write_graphml(net.graph, label, o); }));
        }
        result.files.push_back(emit(cfg, base + ".json", [&](std::ostream& o) {
            io::write_npt_summary(net, label, cfg.hub_count, o);
        }));
    }
    return result;
}

CommandResult cmd_mst(const RunConfig& cfg) {
    const Prepared in = prepare(cfg);
    const PairMatrix m = ud_matrix(in.panel, cfg.ud_variant, cfg.threads);
    const WeightedGraph tree = mst(build_graph(m, Channel::Ud));
    const std::string base = "mst-" + in.window.tag();
    const io::GraphLabel label{base, "", "ud", window_text(in.window)};
    CommandResult result;
    if (wants(cfg, OutputFormat::Dot)) {
        result.files.push_back(emit(cfg, base + ".dot", [&](std::ostream& o) { io::write_dot(tree, label, o); }));
    }
    if (wants(cfg, OutputFormat::GraphMl)) {
        result.files.push_back(emit(cfg, base + ".graphml", [&](std::ostream& o) { io::write_graphml(tree, label, o); }));
    }
    result.files.push_back(
        emit(cfg, base + ".json", [&](std::ostream& o) { io::write_mst_summary(tree, label, cfg.hub_count, o); }));
    return result;
}

CommandResult cmd_synth(const RunConfig& cfg) {
    cfg.validate();
    SynthSpec base;
    base.length = cfg.synth_length;
    base.c = cfg.synth_offset;
    base.seed = cfg.seed;
    base.validate();
    PlcsConfig robust_cfg = cfg.plcs;
    robust_cfg.tail_points = cfg.synth_tail;

    const double range = base_range(base);
    std::vector<double> sigmas;
    for (double f : cfg.sigma_fractions) sigmas.push_back(f * range);
    const auto robustness = robustness_experiment(sigmas, cfg.trials, base, robust_cfg, cfg.threads);
    const auto recovery = recovery_table(cfg.gamma_targets, base, cfg.plcs);

    // Fixture panel: shared base column plus one PowerLawGap partner per target.
    std::vector<std::string> codes = {"BASE"};
    std::vector<std::vector<double>> columns = {base_series(base.base, base.length)};
    for (double g : cfg.gamma_targets) {
        SynthSpec s = base;
        s.kind = SynthKind::PowerLawGap;
        s.gamma_target = g;
        codes.push_back("G" + format_number(g, 6));
        columns.push_back(generate_pair(s).second);
    }
    const SeriesPanel fixtures(std::move(codes), 1, std::move(columns));

    const std::string tag = "seed" + std::to_string(cfg.seed);
    CommandResult result;
    result.files.push_back(emit(cfg, "robustness-" + tag + ".csv",
                                [&](std::ostream& o) { io::write_robustness_csv(robustness, range, o); }));
    result.files.push_back(emit(cfg, "recovery-" + tag + ".csv",
                                [&](std::ostream& o) { io::write_recovery_csv(recovery, o); }));
    result.files.push_back(emit(cfg, "fixtures-" + tag + ".csv", [&](std::ostream& o) { save_panel(fixtures, o); }));
    return result;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const SchemaError*>(&e) ||
        dynamic_cast<const ContiguityError*>(&e)) {
        return exit_codes::kParse;
    }
    if (dynamic_cast<const EmptyGraphError*>(&e) || dynamic_cast<const DegenerateSeriesError*>(&e)) {
        return exit_codes::kDegenerateGraph;
    }
    if (dynamic_cast<const IoError*>(&e) || dynamic_cast<const std::filesystem::filesystem_error*>(&e)) {
        return exit_codes::kIo;
    }
    return exit_codes::kContract;
}

}  // namespace plcsnet::cli
