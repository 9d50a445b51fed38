#pragma once

#include <cstddef>
#include <span>
#include <string_view>

// Arithmetic inner loops of the sensing pipeline, plus the deterministic
// elementary functions used wherever a transcendental feeds a trace file.
//
// Every kernel has a scalar reference implementation and may have SIMD
// variants; variants are selected once at runtime from CPU features and are
// required to produce bit-identical results to the scalar reference. That
// works because reductions use a fixed stride-4 partial-sum order in every
// backend, element-wise ops map 1:1 onto IEEE vector instructions, and the
// whole library is built with FP contraction off.

namespace tangtoys::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);

// The active backend defaults to the best available one; the TANGTOYS_SIMD
// environment variable ("scalar" / "avx2") overrides it at startup.
Backend active_backend();
void set_backend(Backend b);  // throws ValidationError if unavailable

struct Moments {
    double mean = 0.0;
    double std_pop = 0.0;  // population standard deviation (divide by N)
    double max = 0.0;
};

// out[i] = sqrt(x[i]^2 + y[i]^2 + z[i]^2); spans must have equal length.
void vector_norms(std::span<const double> x, std::span<const double> y,
                  std::span<const double> z, std::span<double> out);

// Mean / population std / max over one array. n == 0 yields all zeros.
Moments moments(std::span<const double> values);

double mean(std::span<const double> values);

// Fixed-operation-order sin and log10. Accuracy is within a few ulp of a
// good libm; unlike libm the exact result is the same on every IEEE-754
// platform, which keeps synthesized sensor data and RSSI values
// byte-reproducible across machines. det_sin is valid for |x| <= 2^19*pi/2.
double det_sin(double x);
double det_log10(double x);

namespace detail {
// Per-backend entry points, exposed for the equivalence tests.
void vector_norms_scalar(const double* x, const double* y, const double* z,
                         double* out, std::size_t n);
Moments moments_scalar(const double* values, std::size_t n);
#if defined(__x86_64__)
void vector_norms_avx2(const double* x, const double* y, const double* z,
                       double* out, std::size_t n);
Moments moments_avx2(const double* values, std::size_t n);
#endif
}  // namespace detail

}  // namespace tangtoys::kernels
