#include "plcsnet/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <set>
#include <sstream>
#include <string_view>

#include "plcsnet/error.hpp"
#include "plcsnet/format.hpp"

namespace plcsnet {

namespace {

std::string_view trim(std::string_view s) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
    while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
    while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
    return s;
}

std::vector<std::string_view> split_commas(std::string_view line) {
    std::vector<std::string_view> cells;
    std::size_t begin = 0;
    while (true) {
        const auto pos = line.find(',', begin);
        if (pos == std::string_view::npos) {
            cells.push_back(trim(line.substr(begin)));
            break;
        }
        cells.push_back(trim(line.substr(begin, pos - begin)));
        begin = pos + 1;
    }
    return cells;
}

double parse_value(std::string_view cell, std::size_t row, std::size_t col) {
    // from_chars rejects a leading '+', accept it as the CSV convention allows.
    if (!cell.empty() && cell.front() == '+') cell.remove_prefix(1);
    double v = 0.0;
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
    if (cell.empty() || ec != std::errc{} || ptr != end || !std::isfinite(v)) {
        throw ParseError("malformed number '" + std::string(cell) + "' at row " +
                         std::to_string(row) + ", column " + std::to_string(col));
    }
    return v;
}

int parse_period(std::string_view cell, std::size_t row) {
    int v = 0;
    const auto* end = cell.data() + cell.size();
    const auto [ptr, ec] = std::from_chars(cell.data(), end, v);
    if (cell.empty() || ec != std::errc{} || ptr != end) {
        throw ParseError("malformed period label '" + std::string(cell) + "' at row " +
                         std::to_string(row) + ", column 1");
    }
    return v;
}

}  // namespace

void AnalysisWindow::validate() const {
    if (start_period > end_period) {
        throw ContractError("window start " + std::to_string(start_period) + " is after end " +
                            std::to_string(end_period));
    }
    if (length() < kMinLength) {
        throw ContractError("window " + std::to_string(start_period) + ":" +
                            std::to_string(end_period) + " has " + std::to_string(length()) +
                            " periods; at least " + std::to_string(kMinLength) + " are required");
    }
}

AnalysisWindow AnalysisWindow::parse(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw ContractError("window must be START:END, got '" + text + "'");
    }
    AnalysisWindow w;
    const std::string_view sv(text);
    for (auto [part, out] : {std::pair{sv.substr(0, colon), &w.start_period},
                             std::pair{sv.substr(colon + 1), &w.end_period}}) {
        part = trim(part);
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), *out);
        if (part.empty() || ec != std::errc{} || ptr != part.data() + part.size()) {
            throw ContractError("window must be START:END, got '" + text + "'");
        }
    }
    w.validate();
    return w;
}

std::string AnalysisWindow::tag() const {
    return std::to_string(start_period) + "_" + std::to_string(end_period);
}

SeriesPanel::SeriesPanel(std::vector<std::string> entities, int first_period,
                         std::vector<std::vector<double>> columns)
    : entities_(std::move(entities)), first_period_(first_period), columns_(std::move(columns)) {
    if (entities_.empty()) throw SchemaError("panel has no entities");
    if (columns_.size() != entities_.size()) {
        throw SchemaError("panel has " + std::to_string(entities_.size()) + " entities but " +
                          std::to_string(columns_.size()) + " columns");
    }
    std::set<std::string> seen;
    for (const auto& code : entities_) {
        if (code.empty()) throw SchemaError("empty entity code");
        if (!seen.insert(code).second) throw SchemaError("duplicate entity " + code);
    }
    period_count_ = columns_.front().size();
    if (period_count_ == 0) throw SchemaError("panel has no periods");
    for (std::size_t e = 0; e < columns_.size(); ++e) {
        if (columns_[e].size() != period_count_) {
            throw SchemaError("entity " + entities_[e] + " has " +
                              std::to_string(columns_[e].size()) + " values, expected " +
                              std::to_string(period_count_));
        }
        for (double v : columns_[e]) {
            if (!std::isfinite(v)) throw SchemaError("non-finite value in entity " + entities_[e]);
        }
    }
}

std::vector<int> SeriesPanel::periods() const {
    std::vector<int> out(period_count_);
    std::iota(out.begin(), out.end(), first_period_);
    return out;
}

std::size_t SeriesPanel::index_of(const std::string& code) const {
    const auto it = std::find(entities_.begin(), entities_.end(), code);
    if (it == entities_.end()) throw ContractError("unknown entity " + code);
    return static_cast<std::size_t>(it - entities_.begin());
}

SeriesPanel load_panel(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    std::vector<std::string> entities;

    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (!trim(line).empty()) break;
    }
    if (trim(line).empty()) throw SchemaError("empty panel: no header row");

    const auto header = split_commas(line);
    if (header.size() < 2) throw SchemaError("header must hold a period column and at least one entity");
    for (std::size_t c = 1; c < header.size(); ++c) entities.emplace_back(header[c]);
    {
        std::set<std::string> seen;
        for (const auto& code : entities) {
            if (code.empty()) throw SchemaError("empty entity code in header");
            if (!seen.insert(code).second) throw SchemaError("duplicate entity " + code);
        }
    }

    std::vector<std::pair<int, std::vector<double>>> rows;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const auto cells = split_commas(line);
        if (cells.size() != header.size()) {
            throw ParseError("row " + std::to_string(line_no) + " has " +
                             std::to_string(cells.size()) + " cells, expected " +
                             std::to_string(header.size()));
        }
        std::vector<double> values(entities.size());
        for (std::size_t c = 1; c < cells.size(); ++c) {
            if (cells[c].empty()) {
                throw ParseError("missing value at row " + std::to_string(line_no) +
                                 ", column " + std::to_string(c + 1) + " (" + entities[c - 1] + ")");
            }
            values[c - 1] = parse_value(cells[c], line_no, c + 1);
        }
        rows.emplace_back(parse_period(cells[0], line_no), std::move(values));
    }
    if (rows.empty()) throw SchemaError("empty panel: no data rows");

    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& l, const auto& r) { return l.first < r.first; });
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const int prev = rows[r - 1].first;
        const int cur = rows[r].first;
        if (cur == prev) throw ContiguityError("duplicate period " + std::to_string(cur));
        if (cur != prev + 1) {
            throw ContiguityError("gap in periods: missing " + std::to_string(prev + 1) +
                                  (cur > prev + 2 ? " to " + std::to_string(cur - 1) : std::string{}));
        }
    }

    std::vector<std::vector<double>> columns(entities.size(), std::vector<double>(rows.size()));
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t e = 0; e < entities.size(); ++e) columns[e][r] = rows[r].second[e];
    }
    return SeriesPanel(std::move(entities), rows.front().first, std::move(columns));
}

SeriesPanel load_panel_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path);
    try {
        return load_panel(in);
    } catch (const ParseError& e) {
        throw ParseError(path + ": " + e.what());
    } catch (const SchemaError& e) {
        throw SchemaError(path + ": " + e.what());
    } catch (const ContiguityError& e) {
        throw ContiguityError(path + ": " + e.what());
    }
}

void save_panel(const SeriesPanel& panel, std::ostream& out) {
    out << "period";
    for (const auto& code : panel.entities()) out << ',' << code;
    out << '\n';
    for (std::size_t p = 0; p < panel.period_count(); ++p) {
        out << panel.first_period() + static_cast<int>(p);
        for (std::size_t e = 0; e < panel.entity_count(); ++e) {
            out << ',' << format_number(panel.value(p, e), 15);
        }
        out << '\n';
    }
}

SeriesPanel window_panel(const SeriesPanel& panel, const AnalysisWindow& window) {
    window.validate();
    if (window.start_period < panel.first_period() || window.end_period > panel.last_period()) {
        throw BoundsError("window " + std::to_string(window.start_period) + ":" +
                          std::to_string(window.end_period) + " outside available range " +
                          std::to_string(panel.first_period()) + ":" +
                          std::to_string(panel.last_period()));
    }
    const auto offset = static_cast<std::size_t>(window.start_period - panel.first_period());
    const auto len = window.length();
    std::vector<std::vector<double>> columns;
    columns.reserve(panel.entity_count());
    for (std::size_t e = 0; e < panel.entity_count(); ++e) {
        const auto s = panel.series(e).subspan(offset, len);
        columns.emplace_back(s.begin(), s.end());
    }
    return SeriesPanel(panel.entities(), window.start_period, std::move(columns));
}

}  // namespace plcsnet
