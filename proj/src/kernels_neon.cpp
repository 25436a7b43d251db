// NEON variants; baseline on aarch64, so no runtime feature probe is needed.
#include "rootform/kernels.hpp"

#ifdef __aarch64__

#include <arm_neon.h>

namespace rootform::kernels {

namespace {

double dot_neon(const double* x, const double* y, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        acc = vfmaq_f64(acc, vld1q_f64(x + i), vld1q_f64(y + i));
    double tail = 0.0;
    for (; i < n; ++i)
        tail += x[i] * y[i];
    return vaddvq_f64(acc) + tail;
}

double sum_sq_neon(const double* x, std::size_t n) {
    float64x2_t acc = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t v = vld1q_f64(x + i);
        acc = vfmaq_f64(acc, v, v);
    }
    double tail = 0.0;
    for (; i < n; ++i)
        tail += x[i] * x[i];
    return vaddvq_f64(acc) + tail;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
    const float64x2_t a = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(y + i, vfmaq_f64(vld1q_f64(y + i), a, vld1q_f64(x + i)));
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

void scal_neon(double alpha, double* x, std::size_t n) {
    const float64x2_t a = vdupq_n_f64(alpha);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2)
        vst1q_f64(x + i, vmulq_f64(a, vld1q_f64(x + i)));
    for (; i < n; ++i)
        x[i] *= alpha;
}

void rot_neon(double* x, double* y, std::size_t n, double c, double s) {
    const float64x2_t vc = vdupq_n_f64(c);
    const float64x2_t vs = vdupq_n_f64(s);
    std::size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t xi = vld1q_f64(x + i);
        float64x2_t yi = vld1q_f64(y + i);
        vst1q_f64(x + i, vfmsq_f64(vmulq_f64(vc, xi), vs, yi));
        vst1q_f64(y + i, vfmaq_f64(vmulq_f64(vc, yi), vs, xi));
    }
    for (; i < n; ++i) {
        double xi = x[i];
        double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

constexpr KernelTable kNeonTable{dot_neon, sum_sq_neon, axpy_neon, scal_neon, rot_neon};

} // namespace

const KernelTable* neon_table() noexcept { return &kNeonTable; }

} // namespace rootform::kernels

#else

namespace rootform::kernels {
const KernelTable* neon_table() noexcept { return nullptr; }
} // namespace rootform::kernels

#endif
