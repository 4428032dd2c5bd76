// Scalar reference kernels. Every SIMD variant is tested against these.

#include "variants.hpp"

namespace tvc::kernels::detail {
namespace {

double dot_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

void axpy_scalar(double alpha, const double* x, double* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void affine_scalar(double offset, const double* scale, const double* x, double* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = offset + scale[i] * x[i];
}

void add_scalar(const double* x, double* acc, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) acc[i] += x[i];
}

}  // namespace

const KernelTable scalar_table{Isa::scalar, dot_scalar, axpy_scalar, affine_scalar, add_scalar};

}  // namespace tvc::kernels::detail
