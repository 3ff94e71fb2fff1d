#pragma once

// Power-law classification of a pair of series.
//
// The cumulative Manhattan distance M(j) = sum_{i<=j} |a_i - b_i| is fitted as
// a power law M(j) ~ j^alpha over its largest-j tail in log-log coordinates.
// The correlation class is gamma = alpha - 1:
//   gamma < 0   converging series,
//   gamma = 0   constant offset (linear relation),
//   gamma = 1   linearly diverging,
//   gamma > 1   strongly diverging.
// beta is the two-sided OLS p-value of the slope against zero slope (an
// interpretation of "significance probability of the fit"). Smaller beta
// means the power law, and so the class, is more stable over the window.
//
// |a_i - b_i| is taken unconditionally. When a - b changes sign inside the
// window the cumulative sum no longer reads as the area between two ordered
// curves; the class is still reported.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace plcsnet {

class PairMatrix;
class SeriesPanel;

/// Nondecreasing running sum of absolute differences, one entry per period.
class CumulativeMd {
public:
    CumulativeMd() = default;
    explicit CumulativeMd(std::vector<double> values);

    std::span<const double> values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    /// M(j), 1-based as in the definition.
    double at(std::size_t j) const { return values_.at(j - 1); }

private:
    std::vector<double> values_;
};

struct PlcsConfig {
    static constexpr std::size_t kDefaultTail = 10;
    static constexpr double kDefaultMinMd = 1e-12;

    /// Number of largest-j log-log points entering the fit; nullopt means all.
    std::optional<std::size_t> tail_points = kDefaultTail;
    /// M(j) <= min_md is treated as zero and excluded (in panel value units).
    double min_md = kDefaultMinMd;

    void validate() const;
};

struct LogLogPoint {
    double x = 0.0;  // ln j
    double y = 0.0;  // ln M(j)

    friend bool operator==(const LogLogPoint&, const LogLogPoint&) = default;
};

struct FitResult {
    double alpha = 0.0;
    double gamma = 0.0;  // alpha - 1
    double beta = 1.0;   // two-sided slope p-value, in [0, 1]
    double intercept = 0.0;  // natural-log units
    double r_squared = 0.0;
    std::size_t tail_points = 0;
    double t_statistic = 0.0;  // +-inf for an exact fit
    double slope_std_error = 0.0;

    friend bool operator==(const FitResult&, const FitResult&) = default;
};

/// M(j) for j = 1..N. ContractError on length mismatch or empty input.
CumulativeMd cumulative_md(std::span<const double> a, std::span<const double> b);

/// (ln j, ln M(j)) for the tail_points largest j with M(j) > min_md.
/// DegenerateSeriesError if fewer than three usable points remain.
std::vector<LogLogPoint> loglog_points(const CumulativeMd& m, const PlcsConfig& cfg = {});

/// OLS fit y = alpha x + intercept with slope t-test on n - 2 degrees of freedom.
/// A residual at rounding level counts as an exact fit: beta = 0, r^2 = 1.
FitResult fit_power_law(std::span<const LogLogPoint> points);

/// fit_power_law(loglog_points(cumulative_md(a, b), cfg)), evaluated in
/// coordinates anchored at the first tail point so that exact power laws
/// stay exact after rounding. Same slope, p-value and r^2; intercept restored.
FitResult plcs_pair(std::span<const double> a, std::span<const double> b, const PlcsConfig& cfg = {});

/// Fits every unordered entity pair. Pairs whose MD degenerates are marked,
/// not numbered. threads == 0 uses the hardware concurrency.
PairMatrix plcs_matrix(const SeriesPanel& panel, const PlcsConfig& cfg = {}, unsigned threads = 0);

}  // namespace plcsnet
