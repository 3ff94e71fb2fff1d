#pragma once

// Pipeline commands behind the plcsnet executable. Each command reads the
// panel, runs the analysis and writes its files into RunConfig::out_dir.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "plcsnet/ingest.hpp"
#include "plcsnet/netgraph.hpp"
#include "plcsnet/plcs.hpp"
#include "plcsnet/ud.hpp"

namespace plcsnet::cli {

enum class OutputFormat { MatrixCsv, PairsJson, Dot, GraphMl, LoglogCsv };

std::string_view format_name(OutputFormat f);
/// Comma-separated list of matrix-csv, pairs-json, dot, graphml, loglog-csv.
std::set<OutputFormat> parse_formats(const std::string& list);
std::vector<Preference> parse_preferences(const std::string& list);
std::vector<double> parse_number_list(const std::string& list);
/// "all" or an integer >= 3.
std::optional<std::size_t> parse_tail(const std::string& text);

struct RunConfig {
    std::filesystem::path input;
    std::optional<AnalysisWindow> window;  // default: whole panel
    PlcsConfig plcs;
    UdVariant ud_variant = UdVariant::AM;
    std::vector<Preference> preferences = {Preference::ConvergentPreferential,
                                           Preference::StrengthPreferential,
                                           Preference::StabilityPreferential, Preference::SmallDistance};
    std::filesystem::path out_dir = "out";
    std::set<OutputFormat> formats = {OutputFormat::MatrixCsv, OutputFormat::PairsJson, OutputFormat::Dot,
                                      OutputFormat::GraphMl};
    std::uint64_t seed = 0;
    unsigned threads = 0;
    std::size_t hub_count = 3;

    // synth
    std::vector<double> sigma_fractions = {0.0, 0.01, 0.025, 0.05, 0.1, 0.2};
    std::size_t trials = 100;
    std::size_t synth_length = 200;
    double synth_offset = 1.0;
    std::vector<double> gamma_targets = {-0.76, -0.5, 0.0, 0.5, 1.0, 2.0, 4.8};
    std::optional<std::size_t> synth_tail = 30;

    /// ContractError on an empty format set or invalid values.
    void validate() const;
};

/// Applies the keys of a config file object onto cfg. Keys mirror the long
/// flags: input, window, tail, ud-variant, preference, formats, out, seed,
/// threads, hubs, min-md, sigmas, trials, length, offset, targets, synth-tail.
/// ContractError on unknown keys or wrong types.
void apply_config_json(const nlohmann::json& j, RunConfig& cfg);

struct CommandResult {
    std::vector<std::filesystem::path> files;
};

CommandResult cmd_analyze(const RunConfig& cfg);
CommandResult cmd_npt(const RunConfig& cfg);
CommandResult cmd_mst(const RunConfig& cfg);
CommandResult cmd_synth(const RunConfig& cfg);

/// Process exit code for an exception escaping a command.
int exit_code_for(const std::exception& e);

namespace exit_codes {
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kParse = 2;
inline constexpr int kContract = 3;
inline constexpr int kDegenerateGraph = 4;
inline constexpr int kIo = 5;
}  // namespace exit_codes

}  // namespace plcsnet::cli
