#include "plcsnet/synth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "plcsnet/error.hpp"
#include "plcsnet/pair_matrix.hpp"

namespace plcsnet {

namespace {

class GaussianSource {
public:
    explicit GaussianSource(std::uint64_t seed) : engine_(mix_seed(seed, 0)) {}

    double next() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double scale = std::sqrt(-2.0 * portable_log(s) / s);
        spare_ = v * scale;
        has_spare_ = true;
        return u * scale;
    }

private:
    // 53 random bits -> [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// (i^p - (i-1)^p) / p for p = g + 1 > 0. Written through expm1/log1p so the
// difference keeps full precision when i is large.
double power_increment(double i, double p) {
    if (i == 1.0) return 1.0 / p;
    const double ip = std::pow(i, p);
    return -ip * std::expm1(p * std::log1p(-1.0 / i)) / p;
}

}  // namespace

std::string_view synth_kind_name(SynthKind k) {
    switch (k) {
        case SynthKind::PowerLawGap: return "power_law_gap";
        case SynthKind::LinearOffset: return "linear_offset";
        case SynthKind::AffineLinked: return "affine_linked";
        case SynthKind::NoisyLinear: return "noisy_linear";
    }
    return "unknown";
}

void SynthSpec::validate() const {
    if (length < 4) throw ContractError("synthetic series length must be >= 4");
    if (!(c > 0.0) || !std::isfinite(c)) throw ContractError("synthetic scale c must be > 0");
    if (!(noise_sigma >= 0.0) || !std::isfinite(noise_sigma)) throw ContractError("noise_sigma must be >= 0");
    if (kind == SynthKind::PowerLawGap && !(gamma_target > -1.0)) {
        throw ContractError("gamma_target <= -1 is unsupported: the cumulative gap converges");
    }
    if (kind == SynthKind::PowerLawGap && !std::isfinite(gamma_target)) {
        throw ContractError("gamma_target must be finite");
    }
    if (kind == SynthKind::AffineLinked && !(slope > 0.0)) throw ContractError("affine slope must be > 0");
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double portable_log(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) throw ContractError("portable_log needs a positive finite argument");
    int exponent = 0;
    double m = std::frexp(x, &exponent);  // exact: m in [0.5, 1)
    if (m < 0.70710678118654752) {
        m *= 2.0;
        --exponent;
    }
    // ln m = 2 atanh(s), s = (m - 1) / (m + 1), |s| < 0.172
    const double s = (m - 1.0) / (m + 1.0);
    const double s2 = s * s;
    double term = s;
    double series = 0.0;
    for (int k = 1; k <= 27; k += 2) {
        series += term / k;
        term *= s2;
    }
    constexpr double kLn2Hi = 6.93147180369123816490e-01;
    constexpr double kLn2Lo = 1.90821492927058770002e-10;
    const double e = static_cast<double>(exponent);
    return e * kLn2Hi + (e * kLn2Lo + 2.0 * series);
}

std::vector<double> base_series(BaseShape shape, std::size_t length) {
    std::vector<double> a(length);
    double growth = 100.0;
    for (std::size_t i = 0; i < length; ++i) {
        if (shape == BaseShape::Linear) {
            a[i] = static_cast<double>(i + 1);
        } else {
            growth *= 1.03;
            a[i] = growth;
        }
    }
    return a;
}

double base_range(const SynthSpec& spec) {
    const auto a = base_series(spec.base, spec.length);
    const auto [lo, hi] = std::minmax_element(a.begin(), a.end());
    return *hi - *lo;
}

SeriesPair generate_pair(const SynthSpec& spec) {
    spec.validate();
    std::vector<double> a = base_series(spec.base, spec.length);
    std::vector<double> b(spec.length);
    switch (spec.kind) {
        case SynthKind::PowerLawGap: {
            const double p = spec.gamma_target + 1.0;
            for (std::size_t i = 0; i < spec.length; ++i) {
                b[i] = a[i] + spec.c * power_increment(static_cast<double>(i + 1), p);
            }
            break;
        }
        case SynthKind::LinearOffset:
            for (std::size_t i = 0; i < spec.length; ++i) b[i] = a[i] + spec.c;
            break;
        case SynthKind::AffineLinked:
            for (std::size_t i = 0; i < spec.length; ++i) b[i] = spec.slope * a[i] + spec.c;
            break;
        case SynthKind::NoisyLinear: {
            GaussianSource noise(spec.seed);
            for (std::size_t i = 0; i < spec.length; ++i) {
                const double eps = spec.noise_sigma > 0.0 ? spec.noise_sigma * noise.next() : 0.0;
                b[i] = a[i] + spec.c + eps;
            }
            break;
        }
    }
    return {std::move(a), std::move(b)};
}

std::vector<RobustnessRow> robustness_experiment(const std::vector<double>& sigmas, std::size_t trials,
                                                 const SynthSpec& base, const PlcsConfig& cfg,
                                                 unsigned threads) {
    if (trials < 10) throw ContractError("robustness experiment needs at least 10 trials");
    if (sigmas.empty()) throw ContractError("robustness experiment needs at least one sigma");
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
        if (!(sigmas[s] >= 0.0)) throw ContractError("sigmas must be nonnegative");
        if (s > 0 && !(sigmas[s] > sigmas[s - 1])) throw ContractError("sigmas must be strictly increasing");
    }
    cfg.validate();

    struct Trial {
        std::optional<double> gamma;
        double ud = 0.0;
    };
    std::vector<Trial> results(sigmas.size() * trials);
    detail::parallel_for(results.size(), threads, [&](std::size_t k) {
        SynthSpec spec = base;
        spec.kind = SynthKind::NoisyLinear;
        spec.noise_sigma = sigmas[k / trials];
        spec.seed = mix_seed(base.seed, k);
        const auto [a, b] = generate_pair(spec);
        try {
            results[k].gamma = plcs_pair(a, b, cfg).gamma;
        } catch (const DegenerateSeriesError&) {
            results[k].gamma.reset();
        }
        results[k].ud = ud(a, b, UdVariant::AM);
    });

    std::vector<RobustnessRow> rows;
    for (std::size_t s = 0; s < sigmas.size(); ++s) {
        RobustnessRow row;
        row.sigma = sigmas[s];
        row.trials = trials;
        double g = 0.0, ag = 0.0, u = 0.0;
        std::size_t fitted = 0;
        for (std::size_t t = 0; t < trials; ++t) {
            const Trial& r = results[s * trials + t];
            u += r.ud;
            if (r.gamma) {
                g += *r.gamma;
                ag += std::fabs(*r.gamma);
                ++fitted;
            } else {
                ++row.degenerate;
            }
        }
        row.mean_ud = u / static_cast<double>(trials);
        if (fitted) {
            row.mean_gamma = g / static_cast<double>(fitted);
            row.mean_abs_gamma = ag / static_cast<double>(fitted);
        } else {
            row.mean_gamma = row.mean_abs_gamma = std::numeric_limits<double>::quiet_NaN();
        }
        rows.push_back(row);
    }
    return rows;
}

std::vector<RecoveryRow> recovery_table(const std::vector<double>& gamma_targets, const SynthSpec& base,
                                        const PlcsConfig& cfg) {
    std::vector<RecoveryRow> rows;
    auto add = [&](SynthSpec spec) {
        const auto [a, b] = generate_pair(spec);
        rows.push_back({spec.kind, spec.kind == SynthKind::PowerLawGap ? spec.gamma_target : 0.0,
                        plcs_pair(a, b, cfg), ud(a, b, UdVariant::AM)});
    };
    for (double g : gamma_targets) {
        SynthSpec spec = base;
        spec.kind = SynthKind::PowerLawGap;
        spec.gamma_target = g;
        add(spec);
    }
    SynthSpec offset = base;
    offset.kind = SynthKind::LinearOffset;
    add(offset);
    return rows;
}

}  // namespace plcsnet
