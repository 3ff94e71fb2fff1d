#include "plcsnet/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "plcsnet/error.hpp"
#include "plcsnet/format.hpp"

namespace plcsnet::io {

namespace {

using nlohmann::ordered_json;

ordered_json number(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round_significant(v);
}

std::string xml_escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) {
        while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
        while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
        cells.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    return cells;
}

ordered_json edge_json(const Edge& e) {
    return {{"u", e.u}, {"v", e.v}, {"weight", number(e.weight)}};
}

ordered_json graph_summary(const WeightedGraph& g, const GraphLabel& label, std::size_t hub_count) {
    const DegreeSummary deg = degrees(g);
    ordered_json j;
    j["name"] = label.name;
    if (!label.preference.empty()) j["preference"] = label.preference;
    j["channel"] = label.channel;
    j["window"] = label.window;
    j["nodes"] = g.node_count();
    j["edges"] = g.edge_count();
    j["connected"] = g.connected();
    ordered_json degree_map = ordered_json::object();
    for (const auto& [node, d] : deg.degree) degree_map[node] = d;
    j["degrees"] = degree_map;
    j["mean_degree"] = number(deg.mean);
    j["hubs"] = hubs(g, std::max<std::size_t>(1, hub_count));
    const auto lonely = unique_min_degree_node(g);
    j["min_degree_node"] = lonely ? ordered_json(*lonely) : ordered_json(nullptr);
    j["cliques"] = cliques(g, 3);
    return j;
}

}  // namespace

void write_matrix_csv(const PairMatrix& m, Channel channel, std::ostream& out) {
    const auto& ents = m.entities();
    out << channel_name(channel);
    for (const auto& e : ents) out << ',' << e;
    out << '\n';
    for (std::size_t i = 0; i < ents.size(); ++i) {
        out << ents[i];
        for (std::size_t j = 0; j < ents.size(); ++j) {
            out << ',';
            if (i == j) continue;
            const auto v = m.value(i, j, channel);
            if (v) {
                out << format_number(*v);
            } else {
                out << kDegenerateToken;
            }
        }
        out << '\n';
    }
}

MatrixCsv read_matrix_csv(std::istream& in) {
    MatrixCsv m;
    std::string line;
    if (!std::getline(in, line)) throw ParseError("matrix csv is empty");
    const auto header = split(line);
    if (header.size() < 3) throw ParseError("matrix csv header needs at least two entities");
    m.entities.assign(header.begin() + 1, header.end());
    const std::size_t n = m.entities.size();
    m.values.assign(n, std::vector<std::optional<double>>(n));
    m.degenerate.assign(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::getline(in, line)) throw ParseError("matrix csv is missing row " + std::to_string(i + 1));
        const auto cells = split(line);
        if (cells.size() != n + 1) throw ParseError("matrix csv row " + std::to_string(i + 1) + " has wrong width");
        if (cells[0] != m.entities[i]) throw ParseError("matrix csv row label " + cells[0] + " does not match header");
        for (std::size_t j = 0; j < n; ++j) {
            const std::string& c = cells[j + 1];
            if (i == j) {
                if (!c.empty()) throw ParseError("matrix csv diagonal must be empty");
                continue;
            }
            if (c == kDegenerateToken) {
                m.degenerate[i][j] = true;
                continue;
            }
            char* end = nullptr;
            const double v = std::strtod(c.c_str(), &end);
            if (c.empty() || end != c.c_str() + c.size()) {
                throw ParseError("malformed matrix cell '" + c + "' at row " + std::to_string(i + 1));
            }
            m.values[i][j] = v;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (m.values[i][j] != m.values[j][i] || m.degenerate[i][j] != m.degenerate[j][i]) {
                throw ParseError("matrix csv is not symmetric at " + m.entities[i] + "," + m.entities[j]);
            }
        }
    }
    return m;
}

void write_pairs_json(const PairMatrix& m, const AnalysisMeta& meta, std::ostream& out) {
    ordered_json root;
    root["window"] = {{"start", meta.window.start_period}, {"end", meta.window.end_period}};
    root["tail_points"] = meta.plcs.tail_points ? ordered_json(*meta.plcs.tail_points) : ordered_json("all");
    root["min_md"] = number(meta.plcs.min_md);
    root["ud_variant"] = ud_variant_name(meta.ud_variant);
    root["log_base"] = "e";
    root["entities"] = m.entities();
    ordered_json pairs = ordered_json::array();
    for (std::size_t k = 0; k < m.pair_count(); ++k) {
        const auto [i, j] = m.pair_at(k);
        const PairResult& r = m.cell_at(k);
        ordered_json p;
        p["a"] = m.entities()[i];
        p["b"] = m.entities()[j];
        const bool plcs_ok = !m.has_channel(Channel::Gamma) || r.fit.has_value();
        const bool ud_ok = !m.has_channel(Channel::Ud) || r.ud.has_value();
        p["status"] = plcs_ok && ud_ok ? "ok" : std::string(kDegenerateToken);
        p["identical"] = r.identical;
        if (r.fit) {
            const FitResult& f = *r.fit;
            p["plcs"] = {{"gamma", number(f.gamma)},         {"beta", number(f.beta)},
                         {"alpha", number(f.alpha)},         {"intercept", number(f.intercept)},
                         {"r_squared", number(f.r_squared)}, {"tail_points", f.tail_points},
                         {"t_statistic", number(f.t_statistic)},
                         {"slope_std_error", number(f.slope_std_error)}};
        } else {
            p["plcs"] = nullptr;
        }
        p["ud"] = r.ud ? number(*r.ud) : ordered_json(nullptr);
        if (!r.note.empty()) p["note"] = r.note;
        pairs.push_back(std::move(p));
    }
    root["pairs"] = std::move(pairs);
    out << root.dump(2) << '\n';
}

void write_loglog_csv(const SeriesPanel& panel, const PlcsConfig& cfg, std::ostream& out) {
    cfg.validate();
    out << "pair_a,pair_b,j,ln_j,ln_md,in_fit\n";
    const auto& ents = panel.entities();
    for (std::size_t i = 0; i < ents.size(); ++i) {
        for (std::size_t k = i + 1; k < ents.size(); ++k) {
            const CumulativeMd m = cumulative_md(panel.series(i), panel.series(k));
            std::size_t usable = 0;
            for (double v : m.values()) usable += v > cfg.min_md ? 1 : 0;
            const std::size_t in_fit = usable < 3 ? 0 : (cfg.tail_points ? std::min(*cfg.tail_points, usable) : usable);
            for (std::size_t j = 1; j <= m.size(); ++j) {
                if (!(m.at(j) > cfg.min_md)) continue;
                out << ents[i] << ',' << ents[k] << ',' << j << ','
                    << format_number(std::log(static_cast<double>(j))) << ','
                    << format_number(std::log(m.at(j))) << ',' << (j + in_fit > m.size() ? 1 : 0) << '\n';
            }
        }
    }
}

void write_dot(const WeightedGraph& g, const GraphLabel& label, std::ostream& out) {
    out << "graph " << dot_quote(label.name) << " {\n";
    out << "  graph [";
    if (!label.preference.empty()) out << "preference=" << dot_quote(label.preference) << ", ";
    out << "channel=" << dot_quote(label.channel) << ", window=" << dot_quote(label.window) << "];\n";
    for (const auto& n : g.nodes()) out << "  " << dot_quote(n) << ";\n";
    const WeightedGraph sorted = g.canonical();
    for (const auto& e : sorted.edges()) {
        const std::string w = format_number(e.weight);
        out << "  " << dot_quote(e.u) << " -- " << dot_quote(e.v) << " [label=" << dot_quote(w)
            << ", value=" << dot_quote(w) << "];\n";
    }
    out << "}\n";
}

void write_graphml(const WeightedGraph& g, const GraphLabel& label, std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<graphml xmlns=\"http://graphml.graphdrawing.org/xmlns\">\n"
        << "  <key id=\"weight\" for=\"edge\" attr.name=\"weight\" attr.type=\"double\"/>\n"
        << "  <key id=\"preference\" for=\"graph\" attr.name=\"preference\" attr.type=\"string\"/>\n"
        << "  <key id=\"channel\" for=\"graph\" attr.name=\"channel\" attr.type=\"string\"/>\n"
        << "  <key id=\"window\" for=\"graph\" attr.name=\"window\" attr.type=\"string\"/>\n"
        << "  <graph id=\"" << xml_escape(label.name) << "\" edgedefault=\"undirected\">\n";
    if (!label.preference.empty()) {
        out << "    <data key=\"preference\">" << xml_escape(label.preference) << "</data>\n";
    }
    out << "    <data key=\"channel\">" << xml_escape(label.channel) << "</data>\n"
        << "    <data key=\"window\">" << xml_escape(label.window) << "</data>\n";
    for (const auto& n : g.nodes()) out << "    <node id=\"" << xml_escape(n) << "\"/>\n";
    const WeightedGraph sorted = g.canonical();
    for (const auto& e : sorted.edges()) {
        out << "    <edge source=\"" << xml_escape(e.u) << "\" target=\"" << xml_escape(e.v)
            << "\"><data key=\"weight\">" << format_number(e.weight) << "</data></edge>\n";
    }
    out << "  </graph>\n</graphml>\n";
}

void write_npt_summary(const ThresholdNetwork& net, const GraphLabel& label, std::size_t hub_count,
                       std::ostream& out) {
    ordered_json j = graph_summary(net.graph, label, hub_count);
    j["bridge"] = edge_json(net.bridge);
    j["removal_count"] = net.removed.size();
    ordered_json removed = ordered_json::array();
    for (const auto& e : net.removed) removed.push_back(edge_json(e));
    j["removed"] = std::move(removed);
    out << j.dump(2) << '\n';
}

void write_mst_summary(const WeightedGraph& tree, const GraphLabel& label, std::size_t hub_count,
                       std::ostream& out) {
    ordered_json j = graph_summary(tree, label, hub_count);
    j["total_weight"] = number(tree.total_weight());
    out << j.dump(2) << '\n';
}

void write_robustness_csv(const std::vector<RobustnessRow>& rows, double base_range, std::ostream& out) {
    out << "sigma,sigma_fraction_of_range,trials,degenerate,mean_gamma,mean_abs_gamma,mean_ud_am\n";
    for (const auto& r : rows) {
        out << format_number(r.sigma) << ',' << format_number(base_range > 0 ? r.sigma / base_range : 0.0)
            << ',' << r.trials << ',' << r.degenerate << ',' << format_number(r.mean_gamma) << ','
            << format_number(r.mean_abs_gamma) << ',' << format_number(r.mean_ud) << '\n';
    }
}

void write_recovery_csv(const std::vector<RecoveryRow>& rows, std::ostream& out) {
    out << "kind,gamma_target,gamma,beta,alpha,intercept,r_squared,tail_points,ud_am\n";
    for (const auto& r : rows) {
        out << synth_kind_name(r.kind) << ',' << format_number(r.gamma_target) << ','
            << format_number(r.fit.gamma) << ',' << format_number(r.fit.beta) << ','
            << format_number(r.fit.alpha) << ',' << format_number(r.fit.intercept) << ','
            << format_number(r.fit.r_squared) << ',' << r.fit.tail_points << ',' << format_number(r.ud)
            << '\n';
    }
}

std::optional<std::string> unique_min_degree_node(const WeightedGraph& g) {
    const DegreeSummary deg = degrees(g);
    if (deg.degree.empty()) return std::nullopt;
    std::size_t lowest = deg.degree.begin()->second;
    for (const auto& [node, d] : deg.degree) lowest = std::min(lowest, d);
    std::optional<std::string> found;
    for (const auto& [node, d] : deg.degree) {
        if (d != lowest) continue;
        if (found) return std::nullopt;
        found = node;
    }
    return found;
}

void write_file_atomic(const std::filesystem::path& path, const std::string& contents) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw IoError("cannot write " + tmp.string());
        out << contents;
        out.flush();
        if (!out) throw IoError("write failed for " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) throw IoError("cannot rename " + tmp.string() + " to " + path.string() + ": " + ec.message());
}

}  // namespace plcsnet::io
