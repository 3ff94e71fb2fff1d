#pragma once

// Data-parallel inner loops shared by the PLCS and Pearson code.
//
// Each kernel has a scalar reference implementation and, on x86-64, an AVX2
// variant. The public entry points dispatch on the CPU detected at first use;
// tests force each ISA and compare against the scalar reference.

#include <cstddef>
#include <span>
#include <string_view>

namespace plcsnet::kernels {

enum class Isa { Scalar, Avx2 };

std::string_view isa_name(Isa isa);

/// Best ISA the running CPU supports.
Isa detected_isa();

/// ISA the dispatching entry points currently use.
Isa active_isa();

/// Overrides dispatch. Throws ContractError if the CPU lacks the ISA.
void force_isa(Isa isa);

/// True if this build and CPU can run the ISA.
bool isa_available(Isa isa);

/// Centered second moments about given means.
struct CrossMoments {
    double saa = 0.0;  // sum (a - mean_a)^2
    double sbb = 0.0;  // sum (b - mean_b)^2
    double sab = 0.0;  // sum (a - mean_a)(b - mean_b)
};

/// out[i] = |a[i] - b[i]|. Exact in every ISA.
void abs_diff(std::span<const double> a, std::span<const double> b, std::span<double> out);

double sum(std::span<const double> x);

CrossMoments centered_moments(std::span<const double> a, std::span<const double> b,
                              double mean_a, double mean_b);

namespace scalar {
void abs_diff(std::span<const double> a, std::span<const double> b, std::span<double> out);
double sum(std::span<const double> x);
CrossMoments centered_moments(std::span<const double> a, std::span<const double> b,
                              double mean_a, double mean_b);
}  // namespace scalar

#if defined(__x86_64__) || defined(_M_X64)
#define PLCSNET_HAVE_AVX2_KERNELS 1
namespace avx2 {
void abs_diff(std::span<const double> a, std::span<const double> b, std::span<double> out);
double sum(std::span<const double> x);
CrossMoments centered_moments(std::span<const double> a, std::span<const double> b,
                              double mean_a, double mean_b);
}  // namespace avx2
#else
#define PLCSNET_HAVE_AVX2_KERNELS 0
#endif

}  // namespace plcsnet::kernels
