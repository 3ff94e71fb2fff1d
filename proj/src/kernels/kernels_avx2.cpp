#include "plcsnet/kernels.hpp"

#if PLCSNET_HAVE_AVX2_KERNELS

#include <immintrin.h>

#include <cmath>

#define PLCSNET_AVX2 __attribute__((target("avx2")))

namespace plcsnet::kernels::avx2 {

namespace {

PLCSNET_AVX2 inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d pair = _mm_add_pd(lo, hi);
    const __m128d swapped = _mm_unpackhi_pd(pair, pair);
    return _mm_cvtsd_f64(_mm_add_sd(pair, swapped));
}

}  // namespace

PLCSNET_AVX2 void abs_diff(std::span<const double> a, std::span<const double> b,
                           std::span<double> out) {
    const std::size_t n = out.size();
    // Clearing the sign bit is |x| for every IEEE double, including -0.0.
    const __m256d sign_mask = _mm256_set1_pd(-0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), _mm256_loadu_pd(b.data() + i));
        _mm256_storeu_pd(out.data() + i, _mm256_andnot_pd(sign_mask, d));
    }
    for (; i < n; ++i) out[i] = std::fabs(a[i] - b[i]);
}

PLCSNET_AVX2 double sum(std::span<const double> x) {
    const std::size_t n = x.size();
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x.data() + i));
        acc1 = _mm256_add_pd(acc1, _mm256_loadu_pd(x.data() + i + 4));
    }
    for (; i + 4 <= n; i += 4) acc0 = _mm256_add_pd(acc0, _mm256_loadu_pd(x.data() + i));
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i) s += x[i];
    return s;
}

PLCSNET_AVX2 CrossMoments centered_moments(std::span<const double> a, std::span<const double> b,
                                           double mean_a, double mean_b) {
    const std::size_t n = a.size();
    const __m256d ma = _mm256_set1_pd(mean_a);
    const __m256d mb = _mm256_set1_pd(mean_b);
    __m256d saa = _mm256_setzero_pd();
    __m256d sbb = _mm256_setzero_pd();
    __m256d sab = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d da = _mm256_sub_pd(_mm256_loadu_pd(a.data() + i), ma);
        const __m256d db = _mm256_sub_pd(_mm256_loadu_pd(b.data() + i), mb);
        saa = _mm256_add_pd(saa, _mm256_mul_pd(da, da));
        sbb = _mm256_add_pd(sbb, _mm256_mul_pd(db, db));
        sab = _mm256_add_pd(sab, _mm256_mul_pd(da, db));
    }
    CrossMoments m{hsum(saa), hsum(sbb), hsum(sab)};
    for (; i < n; ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        m.saa += da * da;
        m.sbb += db * db;
        m.sab += da * db;
    }
    return m;
}

}  // namespace plcsnet::kernels::avx2

#endif
