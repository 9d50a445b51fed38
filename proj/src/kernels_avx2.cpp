// AVX2 variants. Compiled with -mavx2 for this translation unit only; only
// reached through the dispatch table when the CPU reports AVX2.
//
// Bit-identity with the scalar reference is a hard requirement (the
// simulator's traces must not depend on the machine they ran on), so this
// file mirrors the scalar operation order exactly: lane j of an accumulator
// holds the stride-4 partial sum over indices i ≡ j (mod 4), tails run the
// scalar loop on the spilled partials, and no FMA is used anywhere.

#if defined(__x86_64__)

#include <immintrin.h>

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "tangtoys/kernels.hpp"

namespace tangtoys::kernels::detail {

void vector_norms_avx2(const double* x, const double* y, const double* z,
                       double* out, std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d vx = _mm256_loadu_pd(x + i);
        const __m256d vy = _mm256_loadu_pd(y + i);
        const __m256d vz = _mm256_loadu_pd(z + i);
        const __m256d sq = _mm256_add_pd(
            _mm256_add_pd(_mm256_mul_pd(vx, vx), _mm256_mul_pd(vy, vy)),
            _mm256_mul_pd(vz, vz));
        _mm256_storeu_pd(out + i, _mm256_sqrt_pd(sq));
    }
    for (; i < n; ++i) {
        out[i] = std::sqrt((x[i] * x[i] + y[i] * y[i]) + z[i] * z[i]);
    }
}

Moments moments_avx2(const double* values, std::size_t n) {
    if (n < 8) return moments_scalar(values, n);

    const std::size_t nvec = n & ~std::size_t{3};

    __m256d acc = _mm256_loadu_pd(values);
    __m256d vmax = acc;
    for (std::size_t i = 4; i < nvec; i += 4) {
        const __m256d v = _mm256_loadu_pd(values + i);
        acc = _mm256_add_pd(acc, v);
        vmax = _mm256_max_pd(vmax, v);
    }

    double s[4];
    double m[4];
    _mm256_storeu_pd(s, acc);
    _mm256_storeu_pd(m, vmax);
    double mx = std::max(std::max(m[0], m[1]), std::max(m[2], m[3]));
    for (std::size_t i = nvec; i < n; ++i) {
        s[i & 3] += values[i];
        mx = std::max(mx, values[i]);
    }
    const double mean = ((s[0] + s[1]) + (s[2] + s[3])) / static_cast<double>(n);

    const __m256d vmean = _mm256_set1_pd(mean);
    __m256d dacc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < nvec; i += 4) {
        const __m256d dev = _mm256_sub_pd(_mm256_loadu_pd(values + i), vmean);
        dacc = _mm256_add_pd(dacc, _mm256_mul_pd(dev, dev));
    }
    double d[4];
    _mm256_storeu_pd(d, dacc);
    for (std::size_t i = nvec; i < n; ++i) {
        const double dev = values[i] - mean;
        d[i & 3] += dev * dev;
    }
    const double var = ((d[0] + d[1]) + (d[2] + d[3])) / static_cast<double>(n);

    return {mean, std::sqrt(var), mx};
}

}  // namespace tangtoys::kernels::detail

#endif  // __x86_64__
