#include <cmath>

#include "plcsnet/kernels.hpp"

namespace plcsnet::kernels::scalar {

void abs_diff(std::span<const double> a, std::span<const double> b, std::span<double> out) {
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::fabs(a[i] - b[i]);
}

double sum(std::span<const double> x) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
}

CrossMoments centered_moments(std::span<const double> a, std::span<const double> b,
                              double mean_a, double mean_b) {
    CrossMoments m;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const double da = a[i] - mean_a;
        const double db = b[i] - mean_b;
        m.saa += da * da;
        m.sbb += db * db;
        m.sab += da * db;
    }
    return m;
}

}  // namespace plcsnet::kernels::scalar
