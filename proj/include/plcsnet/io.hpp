#pragma once

// Text serialization of matrices, networks and reports. Numbers are written
// with 12 significant digits so repeated runs are byte-identical.

#include <filesystem>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "plcsnet/ingest.hpp"
#include "plcsnet/netgraph.hpp"
#include "plcsnet/pair_matrix.hpp"
#include "plcsnet/synth.hpp"
#include "plcsnet/ud.hpp"

namespace plcsnet::io {

inline constexpr std::string_view kDegenerateToken = "degenerate";

/// Square CSV: header ",E1,E2,...", one row per entity, empty diagonal,
/// "degenerate" for pairs without a value on the channel.
void write_matrix_csv(const PairMatrix& m, Channel channel, std::ostream& out);

/// Parsed matrix-csv: full square of optional values (diagonal nullopt).
struct MatrixCsv {
    std::vector<std::string> entities;
    std::vector<std::vector<std::optional<double>>> values;
    std::vector<std::vector<bool>> degenerate;
};
/// ParseError on malformed text or an asymmetric matrix.
MatrixCsv read_matrix_csv(std::istream& in);

struct AnalysisMeta {
    AnalysisWindow window;
    PlcsConfig plcs;
    UdVariant ud_variant = UdVariant::AM;
};

/// Per-pair results with every FitResult field.
void write_pairs_json(const PairMatrix& m, const AnalysisMeta& meta, std::ostream& out);

/// pair_a,pair_b,j,ln_j,ln_md,in_fit for every point with M(j) > min_md.
void write_loglog_csv(const SeriesPanel& panel, const PlcsConfig& cfg, std::ostream& out);

struct GraphLabel {
    std::string name;        // graph id, e.g. "cp-2002_2011"
    std::string preference;  // empty for the MST
    std::string channel;
    std::string window;      // "START:END"
};

void write_dot(const WeightedGraph& g, const GraphLabel& label, std::ostream& out);
void write_graphml(const WeightedGraph& g, const GraphLabel& label, std::ostream& out);

/// Degrees, mean degree, hubs, cliques >= 3, bridge, removal log.
void write_npt_summary(const ThresholdNetwork& net, const GraphLabel& label, std::size_t hub_count,
                       std::ostream& out);
void write_mst_summary(const WeightedGraph& tree, const GraphLabel& label, std::size_t hub_count,
                       std::ostream& out);

void write_robustness_csv(const std::vector<RobustnessRow>& rows, double base_range, std::ostream& out);
void write_recovery_csv(const std::vector<RecoveryRow>& rows, std::ostream& out);

/// Unique lowest-degree node, if one exists.
std::optional<std::string> unique_min_degree_node(const WeightedGraph& g);

/// Writes via a sibling temp file and rename, so readers never see a partial file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace plcsnet::io
