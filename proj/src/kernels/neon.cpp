// NEON kernels, 2 doubles per register. AArch64 only.

#include <arm_neon.h>

#include "variants.hpp"

namespace tvc::kernels::detail {
namespace {

double dot_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc0 = vdupq_n_f64(0.0);
  float64x2_t acc1 = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    acc1 = vaddq_f64(acc1, vmulq_f64(vld1q_f64(a + i + 2), vld1q_f64(b + i + 2)));
  }
  if (i + 2 <= n) {
    acc0 = vaddq_f64(acc0, vmulq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
    i += 2;
  }
  acc0 = vaddq_f64(acc0, acc1);
  double s = vgetq_lane_f64(acc0, 0) + vgetq_lane_f64(acc0, 1);
  for (; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_neon(double alpha, const double* x, double* y, std::size_t n) {
  const float64x2_t va = vdupq_n_f64(alpha);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(y + i, vaddq_f64(vld1q_f64(y + i), vmulq_f64(va, vld1q_f64(x + i))));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void affine_neon(double offset, const double* scale, const double* x, double* out, std::size_t n) {
  const float64x2_t vo = vdupq_n_f64(offset);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    vst1q_f64(out + i, vaddq_f64(vo, vmulq_f64(vld1q_f64(scale + i), vld1q_f64(x + i))));
  }
  for (; i < n; ++i) out[i] = offset + scale[i] * x[i];
}

void add_neon(const double* x, double* acc, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) vst1q_f64(acc + i, vaddq_f64(vld1q_f64(acc + i), vld1q_f64(x + i)));
  for (; i < n; ++i) acc[i] += x[i];
}

}  // namespace

const KernelTable neon_table{Isa::neon, dot_neon, axpy_neon, affine_neon, add_neon};

}  // namespace tvc::kernels::detail
