#pragma once

// Pearson correlation and the ultrametric distance built on it.
//
//   MS: sqrt(2 (1 - P))    range [0, 2]
//   AM: sqrt((1 - P) / 2)  range [0, 1]; 0 linear, sqrt(2)/2 uncorrelated,
//                          1 anticorrelated
//
// Pearson uses population (1/N) moments. The normalization cancels between
// numerator and denominator, so the coefficient equals the 1/(N-1) version.

#include <span>
#include <string_view>

namespace plcsnet {

class PairMatrix;
class SeriesPanel;

enum class UdVariant { AM, MS };

std::string_view ud_variant_name(UdVariant v);
/// "am" / "ms", case-insensitive. ContractError otherwise.
UdVariant parse_ud_variant(std::string_view text);

/// Product-moment coefficient clamped to [-1, 1].
/// ContractError if N < 2 or lengths differ, ZeroVarianceError if a series is constant.
double pearson(std::span<const double> a, std::span<const double> b);

/// Distance for a given coefficient. A radicand below zero by at most 1e-12
/// is clamped; anything more negative is a ContractError.
double ud_from_pearson(double p, UdVariant variant);

double ud(std::span<const double> a, std::span<const double> b, UdVariant variant = UdVariant::AM);

/// UD for every unordered pair; zero-variance pairs are marked degenerate.
/// Identical series get UD 0 and the same `identical` flag plcs_matrix sets.
PairMatrix ud_matrix(const SeriesPanel& panel, UdVariant variant = UdVariant::AM, unsigned threads = 0);

}  // namespace plcsnet
