#pragma once

// Synthetic pairs with a known correlation class, and the noise-robustness
// experiment comparing the PLCS class with the ultrametric distance.
//
// Every kind starts from a base series a_i (i = 1..N):
//   PowerLawGap    b_i = a_i + d_i, d_i = c (i^(g+1) - (i-1)^(g+1)) / (g+1),
//                  so M(j) = c j^(g+1) / (g+1) and the class is g exactly;
//                  d_i ~ c i^g for large i
//   LinearOffset   b_i = a_i + c
//   AffineLinked   b_i = slope * a_i + c
//   NoisyLinear    b_i = a_i + c + N(0, noise_sigma^2)
//
// Randomness: std::mt19937_64 (bit-specified by the standard), seeded through
// splitmix64; normals by the Marsaglia polar method over a logarithm built
// from IEEE basic operations, so a seed gives the same series on any platform
// that honours IEEE double arithmetic without contraction.

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "plcsnet/plcs.hpp"
#include "plcsnet/ud.hpp"

namespace plcsnet {

enum class SynthKind { PowerLawGap, LinearOffset, AffineLinked, NoisyLinear };
enum class BaseShape {
    Linear,  // a_i = i
    Growth,  // a_i = 100 * 1.03^i, a GDP-like compounding path
};

std::string_view synth_kind_name(SynthKind k);

struct SynthSpec {
    SynthKind kind = SynthKind::PowerLawGap;
    double gamma_target = 0.0;  // PowerLawGap only; must exceed -1
    double c = 1.0;             // scale / offset, > 0
    std::size_t length = 200;   // N >= 4
    double noise_sigma = 0.0;   // NoisyLinear only, >= 0
    std::uint64_t seed = 0;
    double slope = 2.0;         // AffineLinked only, > 0
    BaseShape base = BaseShape::Linear;

    void validate() const;
};

using SeriesPair = std::pair<std::vector<double>, std::vector<double>>;

SeriesPair generate_pair(const SynthSpec& spec);

std::vector<double> base_series(BaseShape shape, std::size_t length);
/// max - min of the base series.
double base_range(const SynthSpec& spec);

/// splitmix64 finalizer; also derives per-trial seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

/// Natural log from +, -, *, / only (bit-reproducible). x > 0, finite.
double portable_log(double x);

struct RobustnessRow {
    double sigma = 0.0;
    std::size_t trials = 0;
    std::size_t degenerate = 0;  // trials whose MD had no usable tail
    double mean_gamma = 0.0;
    double mean_abs_gamma = 0.0;
    double mean_ud = 0.0;  // AM variant
};

/// NoisyLinear ensemble per sigma. Trial t at sigma index s uses seed
/// mix_seed(base.seed, s * trials + t). ContractError if trials < 10 or the
/// sigmas are negative or not strictly increasing.
std::vector<RobustnessRow> robustness_experiment(const std::vector<double>& sigmas, std::size_t trials,
                                                 const SynthSpec& base, const PlcsConfig& cfg,
                                                 unsigned threads = 0);

struct RecoveryRow {
    SynthKind kind = SynthKind::PowerLawGap;
    double gamma_target = 0.0;
    FitResult fit;
    double ud = 0.0;  // AM variant
};

/// PowerLawGap recovery for each target, plus one LinearOffset row.
std::vector<RecoveryRow> recovery_table(const std::vector<double>& gamma_targets, const SynthSpec& base,
                                        const PlcsConfig& cfg);

}  // namespace plcsnet
