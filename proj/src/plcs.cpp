#include "plcsnet/plcs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "plcsnet/error.hpp"
#include "plcsnet/ingest.hpp"
#include "plcsnet/kernels.hpp"
#include "plcsnet/pair_matrix.hpp"
#include "plcsnet/stats.hpp"

namespace plcsnet {

namespace {

struct TailRange {
    std::size_t first_j = 0;  // 1-based
    std::size_t count = 0;
};

TailRange select_tail(const CumulativeMd& m, const PlcsConfig& cfg) {
    cfg.validate();
    if (m.size() == 0) throw ContractError("empty cumulative MD");
    // M is nondecreasing, so the usable points (M > min_md) form a suffix.
    const auto vals = m.values();
    const auto first_usable = static_cast<std::size_t>(
        std::find_if(vals.begin(), vals.end(), [&](double v) { return v > cfg.min_md; }) -
        vals.begin());
    const std::size_t usable = vals.size() - first_usable;
    if (usable < 3) {
        throw DegenerateSeriesError("only " + std::to_string(usable) +
                                    " cumulative MD points exceed min_md; series are near-identical");
    }
    const std::size_t take = cfg.tail_points ? std::min(*cfg.tail_points, usable) : usable;
    return {vals.size() - take + 1, take};
}

}  // namespace

CumulativeMd::CumulativeMd(std::vector<double> values) : values_(std::move(values)) {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] >= 0.0) || (i > 0 && values_[i] < values_[i - 1])) {
            throw ContractError("cumulative MD must be nonnegative and nondecreasing");
        }
    }
}

void PlcsConfig::validate() const {
    if (tail_points && *tail_points < 3) throw ContractError("tail_points must be >= 3");
    if (!(min_md > 0.0) || !std::isfinite(min_md)) throw ContractError("min_md must be > 0");
}

CumulativeMd cumulative_md(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ContractError("series length mismatch: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
    }
    if (a.empty()) throw ContractError("cumulative MD of empty series");
    std::vector<double> m(a.size());
    kernels::abs_diff(a, b, m);
    // Prefix sum stays sequential so M is bit-identical on every ISA.
    for (std::size_t i = 1; i < m.size(); ++i) m[i] += m[i - 1];
    return CumulativeMd(std::move(m));
}

std::vector<LogLogPoint> loglog_points(const CumulativeMd& m, const PlcsConfig& cfg) {
    const TailRange tail = select_tail(m, cfg);
    std::vector<LogLogPoint> points;
    points.reserve(tail.count);
    for (std::size_t j = tail.first_j; j <= m.size(); ++j) {
        points.push_back({std::log(static_cast<double>(j)), std::log(m.at(j))});
    }
    return points;
}

FitResult fit_power_law(std::span<const LogLogPoint> points) {
    const std::size_t n = points.size();
    if (n < 3) throw ContractError("power-law fit needs at least 3 points, got " + std::to_string(n));
    double sx = 0.0, sy = 0.0;
    for (const auto& p : points) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ContractError("non-finite fit point");
        sx += p.x;
        sy += p.y;
    }
    const double dn = static_cast<double>(n);
    const double mx = sx / dn;
    const double my = sy / dn;
    double sxx = 0.0, sxy = 0.0, syy = 0.0, y_scale = 0.0;
    for (const auto& p : points) {
        const double dx = p.x - mx;
        const double dy = p.y - my;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
        y_scale = std::max(y_scale, std::fabs(p.y));
    }
    if (sxx == 0.0) throw ContractError("power-law fit needs distinct x values");

    FitResult r;
    r.alpha = sxy / sxx;
    r.gamma = r.alpha - 1.0;
    r.intercept = my - r.alpha * mx;
    r.tail_points = n;

    double sse = 0.0;
    for (const auto& p : points) {
        const double e = p.y - (r.alpha * p.x + r.intercept);
        sse += e * e;
    }
    const double rounding_rms = 16.0 * std::numeric_limits<double>::epsilon() * (y_scale + 1.0);
    if (std::sqrt(sse / dn) <= rounding_rms) {
        r.beta = 0.0;
        r.r_squared = 1.0;
        r.slope_std_error = 0.0;
        r.t_statistic = r.alpha == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), r.alpha);
        return r;
    }
    const double df = dn - 2.0;
    r.slope_std_error = std::sqrt(sse / df / sxx);
    r.t_statistic = r.alpha / r.slope_std_error;
    r.beta = stats::student_t_two_sided_p(r.t_statistic, df);
    r.r_squared = std::clamp(1.0 - sse / syy, 0.0, 1.0);
    return r;
}

FitResult plcs_pair(std::span<const double> a, std::span<const double> b, const PlcsConfig& cfg) {
    const CumulativeMd m = cumulative_md(a, b);
    const TailRange tail = select_tail(m, cfg);
    const double j0 = static_cast<double>(tail.first_j);
    const double m0 = m.at(tail.first_j);
    std::vector<LogLogPoint> anchored;
    anchored.reserve(tail.count);
    for (std::size_t j = tail.first_j; j <= m.size(); ++j) {
        anchored.push_back({std::log(static_cast<double>(j) / j0), std::log(m.at(j) / m0)});
    }
    FitResult r = fit_power_law(anchored);
    // y - ln M0 = alpha (x - ln j0) + c  =>  intercept = c + ln M0 - alpha ln j0
    r.intercept = r.intercept + std::log(m0) - r.alpha * std::log(j0);
    return r;
}

PairMatrix plcs_matrix(const SeriesPanel& panel, const PlcsConfig& cfg, unsigned threads) {
    cfg.validate();
    if (panel.entity_count() < 2) throw ContractError("plcs_matrix needs at least 2 entities");
    PairMatrix out(panel.entities());
    out.mark_channel(Channel::Gamma);
    detail::parallel_for(out.pair_count(), threads, [&](std::size_t k) {
        const auto [i, j] = out.pair_at(k);
        PairResult& cell = out.cell_at(k);
        const auto a = panel.series(i);
        const auto b = panel.series(j);
        cell.identical = std::equal(a.begin(), a.end(), b.begin(), b.end());
        try {
            cell.fit = plcs_pair(a, b, cfg);
        } catch (const DegenerateSeriesError& e) {
            cell.fit.reset();
            cell.note = std::string("plcs degenerate: ") + e.what();
        }
    });
    return out;
}

}  // namespace plcsnet
