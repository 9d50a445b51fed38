#include "tangtoys/kernels.hpp"

#include <cmath>
#include <cstdlib>
#include <mutex>
#include <string>

#include "tangtoys/errors.hpp"

namespace tangtoys::kernels {

namespace {

struct Ops {
    void (*norms)(const double*, const double*, const double*, double*, std::size_t);
    Moments (*moms)(const double*, std::size_t);
};

constexpr Ops kScalarOps{&detail::vector_norms_scalar, &detail::moments_scalar};
#if defined(__x86_64__)
constexpr Ops kAvx2Ops{&detail::vector_norms_avx2, &detail::moments_avx2};
#endif

Backend g_backend = Backend::Scalar;
const Ops* g_ops = &kScalarOps;
std::once_flag g_init;

void apply_backend(Backend b) {
    g_backend = b;
#if defined(__x86_64__)
    g_ops = (b == Backend::Avx2) ? &kAvx2Ops : &kScalarOps;
#else
    g_ops = &kScalarOps;
#endif
}

void init_backend() {
    Backend pick = backend_available(Backend::Avx2) ? Backend::Avx2 : Backend::Scalar;
    if (const char* env = std::getenv("TANGTOYS_SIMD")) {
        const std::string v(env);
        if (v == "scalar") pick = Backend::Scalar;
        else if (v == "avx2" && backend_available(Backend::Avx2)) pick = Backend::Avx2;
    }
    apply_backend(pick);
}

const Ops& ops() {
    std::call_once(g_init, init_backend);
    return *g_ops;
}

}  // namespace

std::string_view backend_name(Backend b) {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

bool backend_available(Backend b) {
    if (b == Backend::Scalar) return true;
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") != 0;
#else
    return false;
#endif
}

Backend active_backend() {
    std::call_once(g_init, init_backend);
    return g_backend;
}

void set_backend(Backend b) {
    std::call_once(g_init, init_backend);
    if (!backend_available(b)) {
        throw ValidationError("kernel backend not available on this CPU: " +
                              std::string(backend_name(b)));
    }
    apply_backend(b);
}

void vector_norms(std::span<const double> x, std::span<const double> y,
                  std::span<const double> z, std::span<double> out) {
    if (x.size() != y.size() || x.size() != z.size() || x.size() != out.size()) {
        throw InvariantError("vector_norms: span length mismatch");
    }
    ops().norms(x.data(), y.data(), z.data(), out.data(), x.size());
}

Moments moments(std::span<const double> values) {
    return ops().moms(values.data(), values.size());
}

double mean(std::span<const double> values) {
    return moments(values).mean;
}

// ---------------------------------------------------------------------------
// Deterministic elementary functions.
//
// Straight ports of the classic fdlibm kernel polynomials with a Cody-Waite
// three-constant argument reduction. Every operation below is a plain IEEE
// double add/sub/mul/div/sqrt in a fixed order, so results are identical on
// any IEEE-754 platform regardless of the system libm.

namespace {

constexpr double kInvPio2 = 6.36619772367581382433e-01;
constexpr double kPio2_1 = 1.57079632673412561417e+00;  // first 33 bits of pi/2
constexpr double kPio2_2 = 6.07710050650619224932e-11;  // next 33 bits
constexpr double kPio2_3 = 2.02226624879595063154e-21;  // residual

constexpr double kS1 = -1.66666666666666324348e-01;
constexpr double kS2 = 8.33333333332248946124e-03;
constexpr double kS3 = -1.98412698298579493134e-04;
constexpr double kS4 = 2.75573137070700676789e-06;
constexpr double kS5 = -2.50507602534068634195e-08;
constexpr double kS6 = 1.58969099521155010221e-10;

constexpr double kC1 = 4.16666666666666019037e-02;
constexpr double kC2 = -1.38888888888741095749e-03;
constexpr double kC3 = 2.48015872894767294178e-05;
constexpr double kC4 = -2.75573143513906633035e-07;
constexpr double kC5 = 2.08757232129817482790e-09;
constexpr double kC6 = -1.13596475577881948265e-11;

double kernel_sin(double r) {
    const double z = r * r;
    const double p = kS1 + z * (kS2 + z * (kS3 + z * (kS4 + z * (kS5 + z * kS6))));
    return r + (r * z) * p;
}

double kernel_cos(double r) {
    const double z = r * r;
    const double p = kC1 + z * (kC2 + z * (kC3 + z * (kC4 + z * (kC5 + z * kC6))));
    const double hz = 0.5 * z;
    const double w = 1.0 - hz;
    return w + (((1.0 - w) - hz) + (z * z) * p);
}

constexpr double kLg1 = 6.666666666666735130e-01;
constexpr double kLg2 = 3.999999999940941908e-01;
constexpr double kLg3 = 2.857142874366239149e-01;
constexpr double kLg4 = 2.222219843214978396e-01;
constexpr double kLg5 = 1.818357216161805012e-01;
constexpr double kLg6 = 1.531383769920937332e-01;
constexpr double kLg7 = 1.479819860511658591e-01;
constexpr double kLn2Hi = 6.93147180369123816490e-01;
constexpr double kLn2Lo = 1.90821492927058770002e-10;
constexpr double kInvLn10 = 4.34294481903251816668e-01;
constexpr double kSqrtHalf = 7.07106781186547524401e-01;

}  // namespace

double det_sin(double x) {
    if (!std::isfinite(x)) throw ValidationError("det_sin: non-finite argument");
    const double ax = std::fabs(x);
    if (ax <= 7.85398163397448278999e-01) {  // pi/4
        return kernel_sin(x);
    }
    const double fn = std::nearbyint(x * kInvPio2);
    const double r = ((x - fn * kPio2_1) - fn * kPio2_2) - fn * kPio2_3;
    switch (static_cast<long long>(fn) & 3) {
        case 0: return kernel_sin(r);
        case 1: return kernel_cos(r);
        case 2: return -kernel_sin(r);
        default: return -kernel_cos(r);
    }
}

double det_log10(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw ValidationError("det_log10: argument must be positive and finite");
    }
    int e = 0;
    double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
    if (m < kSqrtHalf) {
        m *= 2.0;
        e -= 1;
    }
    const double f = m - 1.0;
    const double s = f / (2.0 + f);
    const double z = s * s;
    const double w = z * z;
    const double t1 = w * (kLg2 + w * (kLg4 + w * kLg6));
    const double t2 = z * (kLg1 + w * (kLg3 + w * (kLg5 + w * kLg7)));
    const double r = t2 + t1;
    const double hfsq = 0.5 * f * f;
    const double k = static_cast<double>(e);
    const double ln = k * kLn2Hi - ((hfsq - (s * (hfsq + r) + k * kLn2Lo)) - f);
    return ln * kInvLn10;
}

}  // namespace tangtoys::kernels
