#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace plcsnet {

/// Inclusive period range [start_period, end_period].
struct AnalysisWindow {
    int start_period = 0;
    int end_period = 0;

    static constexpr std::size_t kMinLength = 4;

    std::size_t length() const { return static_cast<std::size_t>(end_period - start_period + 1); }

    /// Throws ContractError unless start <= end and length >= kMinLength.
    void validate() const;

    /// Parses "START:END".
    static AnalysisWindow parse(const std::string& text);

    /// "START_END", used in output file names.
    std::string tag() const;

    friend bool operator==(const AnalysisWindow&, const AnalysisWindow&) = default;
};

/// Dense panel of equal-unit series. Column-major storage: one contiguous
/// series per entity, indexed by contiguous integer periods.
class SeriesPanel {
public:
    SeriesPanel() = default;

    /// Validates the invariants: unique non-empty codes, contiguous periods,
    /// finite values, columns sized to the period count.
    SeriesPanel(std::vector<std::string> entities, int first_period,
                std::vector<std::vector<double>> columns);

    const std::vector<std::string>& entities() const { return entities_; }
    std::size_t entity_count() const { return entities_.size(); }
    std::size_t period_count() const { return period_count_; }
    int first_period() const { return first_period_; }
    int last_period() const { return first_period_ + static_cast<int>(period_count_) - 1; }
    std::vector<int> periods() const;

    std::span<const double> series(std::size_t entity) const { return columns_.at(entity); }
    double value(std::size_t period_index, std::size_t entity) const {
        return columns_.at(entity).at(period_index);
    }

    /// Throws ContractError if the code is unknown.
    std::size_t index_of(const std::string& code) const;

    friend bool operator==(const SeriesPanel&, const SeriesPanel&) = default;

private:
    std::vector<std::string> entities_;
    int first_period_ = 0;
    std::size_t period_count_ = 0;
    std::vector<std::vector<double>> columns_;
};

/// Reads a wide CSV: header "period,E1,E2,...", then one row per period.
/// Rows may appear in any order; they are sorted by period.
SeriesPanel load_panel(std::istream& in);
SeriesPanel load_panel_file(const std::string& path);

/// Writes the wide CSV layout read by load_panel, values at 15 significant digits.
void save_panel(const SeriesPanel& panel, std::ostream& out);

/// Restricts the panel to the window; BoundsError if it does not fit.
SeriesPanel window_panel(const SeriesPanel& panel, const AnalysisWindow& window);

}  // namespace plcsnet
