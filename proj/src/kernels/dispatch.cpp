#include <atomic>

#include "plcsnet/error.hpp"
#include "plcsnet/kernels.hpp"

namespace plcsnet::kernels {

namespace {

bool cpu_has_avx2() {
#if PLCSNET_HAVE_AVX2_KERNELS && (defined(__GNUC__) || defined(__clang__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

std::atomic<Isa>& active() {
    static std::atomic<Isa> isa{detected_isa()};
    return isa;
}

void check_lengths(std::size_t a, std::size_t b) {
    if (a != b) {
        throw ContractError("kernel length mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
    }
}

}  // namespace

std::string_view isa_name(Isa isa) {
    switch (isa) {
        case Isa::Scalar: return "scalar";
        case Isa::Avx2: return "avx2";
    }
    return "unknown";
}

bool isa_available(Isa isa) {
    if (isa == Isa::Scalar) return true;
    static const bool avx2 = cpu_has_avx2();
    return avx2;
}

Isa detected_isa() { return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar; }

Isa active_isa() { return active().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
    if (!isa_available(isa)) {
        throw ContractError("ISA " + std::string(isa_name(isa)) + " is not available on this CPU");
    }
    active().store(isa, std::memory_order_relaxed);
}

void abs_diff(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    check_lengths(a.size(), b.size());
    check_lengths(a.size(), out.size());
#if PLCSNET_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) return avx2::abs_diff(a, b, out);
#endif
    scalar::abs_diff(a, b, out);
}

double sum(std::span<const double> x) {
#if PLCSNET_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) return avx2::sum(x);
#endif
    return scalar::sum(x);
}

CrossMoments centered_moments(std::span<const double> a, std::span<const double> b,
                              double mean_a, double mean_b) {
    check_lengths(a.size(), b.size());
#if PLCSNET_HAVE_AVX2_KERNELS
    if (active_isa() == Isa::Avx2) return avx2::centered_moments(a, b, mean_a, mean_b);
#endif
    return scalar::centered_moments(a, b, mean_a, mean_b);
}

}  // namespace plcsnet::kernels
