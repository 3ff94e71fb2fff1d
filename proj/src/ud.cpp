#include "plcsnet/ud.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

#include "plcsnet/error.hpp"
#include "plcsnet/ingest.hpp"
#include "plcsnet/kernels.hpp"
#include "plcsnet/pair_matrix.hpp"

namespace plcsnet {

namespace {

constexpr double kRadicandSlack = 1e-12;

}  // namespace

std::string_view ud_variant_name(UdVariant v) {
    return v == UdVariant::AM ? "am" : "ms";
}

UdVariant parse_ud_variant(std::string_view text) {
    std::string lower(text);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (lower == "am") return UdVariant::AM;
    if (lower == "ms") return UdVariant::MS;
    throw ContractError("unknown UD variant '" + std::string(text) + "' (expected am or ms)");
}

double pearson(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) {
        throw ContractError("series length mismatch: " + std::to_string(a.size()) + " vs " +
                            std::to_string(b.size()));
    }
    if (a.size() < 2) throw ContractError("pearson needs at least 2 points");
    const double n = static_cast<double>(a.size());
    const double mean_a = kernels::sum(a) / n;
    const double mean_b = kernels::sum(b) / n;
    const kernels::CrossMoments m = kernels::centered_moments(a, b, mean_a, mean_b);
    if (m.saa == 0.0 || m.sbb == 0.0) throw ZeroVarianceError("pearson of a constant series");
    // sqrt of a correctly rounded square is exact, so equal moments give P = 1
    // exactly; fall back to separate roots if the product leaves normal range.
    const double prod = m.saa * m.sbb;
    const double denom = std::isnormal(prod) ? std::sqrt(prod) : std::sqrt(m.saa) * std::sqrt(m.sbb);
    const double p = m.sab / denom;
    return std::clamp(p, -1.0, 1.0);
}

double ud_from_pearson(double p, UdVariant variant) {
    if (std::isnan(p)) throw ContractError("pearson coefficient is NaN");
    double radicand = 1.0 - p;
    if (radicand < 0.0) {
        if (radicand < -kRadicandSlack) {
            throw ContractError("pearson coefficient " + std::to_string(p) + " exceeds 1");
        }
        radicand = 0.0;
    }
    return variant == UdVariant::AM ? std::sqrt(radicand / 2.0) : std::sqrt(2.0 * radicand);
}

double ud(std::span<const double> a, std::span<const double> b, UdVariant variant) {
    return ud_from_pearson(pearson(a, b), variant);
}

PairMatrix ud_matrix(const SeriesPanel& panel, UdVariant variant, unsigned threads) {
    if (panel.entity_count() < 2) throw ContractError("ud_matrix needs at least 2 entities");
    PairMatrix out(panel.entities());
    out.mark_channel(Channel::Ud);
    detail::parallel_for(out.pair_count(), threads, [&](std::size_t k) {
        const auto [i, j] = out.pair_at(k);
        PairResult& cell = out.cell_at(k);
        const auto a = panel.series(i);
        const auto b = panel.series(j);
        cell.identical = std::equal(a.begin(), a.end(), b.begin(), b.end());
        try {
            cell.ud = ud(a, b, variant);
        } catch (const ZeroVarianceError& e) {
            cell.ud.reset();
            cell.note = std::string("ud degenerate: ") + e.what();
        }
    });
    return out;
}

}  // namespace plcsnet
