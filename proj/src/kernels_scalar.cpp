#include <cmath>
#include <cstddef>

#include "tangtoys/kernels.hpp"

// Scalar reference kernels. The stride-4 partial sums are not an
// optimization here; they pin the reduction order so the AVX2 backend can
// reproduce it lane for lane. Do not "simplify" them to a single
// accumulator.

namespace tangtoys::kernels::detail {

void vector_norms_scalar(const double* x, const double* y, const double* z,
                         double* out, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::sqrt((x[i] * x[i] + y[i] * y[i]) + z[i] * z[i]);
    }
}

Moments moments_scalar(const double* values, std::size_t n) {
    if (n == 0) return {};

    double s[4] = {0.0, 0.0, 0.0, 0.0};
    double mx = values[0];
    for (std::size_t i = 0; i < n; ++i) {
        s[i & 3] += values[i];
        mx = std::max(mx, values[i]);
    }
    const double mean = ((s[0] + s[1]) + (s[2] + s[3])) / static_cast<double>(n);

    double d[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const double dev = values[i] - mean;
        d[i & 3] += dev * dev;
    }
    const double var = ((d[0] + d[1]) + (d[2] + d[3])) / static_cast<double>(n);

    return {mean, std::sqrt(var), mx};
}

}  // namespace tangtoys::kernels::detail
