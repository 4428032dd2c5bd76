#pragma once
// Vector kernels with a scalar reference implementation and SIMD variants
// (AVX2 on x86-64, NEON on AArch64) selected once at runtime.
//
// Elementwise kernels (axpy, affine, add) are bit-identical across variants;
// no variant contracts multiply-add into FMA. dot() reorders its reduction in
// the SIMD variants and agrees with the scalar reference to within the usual
// n * eps * sum|a_i b_i| bound.
//
// The active variant can be forced with TVC_ISA=scalar|avx2|neon.

#include <cstddef>
#include <span>
#include <string_view>

namespace tvc::kernels {

enum class Isa { scalar, avx2, neon };

std::string_view isa_name(Isa isa) noexcept;

struct KernelTable {
  Isa isa;
  double (*dot)(const double* a, const double* b, std::size_t n);
  // y += alpha * x
  void (*axpy)(double alpha, const double* x, double* y, std::size_t n);
  // out = offset + scale .* x
  void (*affine)(double offset, const double* scale, const double* x, double* out, std::size_t n);
  // acc += x
  void (*add)(const double* x, double* acc, std::size_t n);
};

/// Table for a variant, or nullptr if it was not compiled in or the CPU lacks it.
const KernelTable* kernel_table(Isa isa) noexcept;

bool isa_supported(Isa isa) noexcept;
Isa best_isa() noexcept;
Isa active_isa() noexcept;
/// Throws std::invalid_argument if the variant is unavailable.
void set_active_isa(Isa isa);

class ScopedIsa {
 public:
  explicit ScopedIsa(Isa isa) : previous_(active_isa()) { set_active_isa(isa); }
  ~ScopedIsa() { set_active_isa(previous_); }
  ScopedIsa(const ScopedIsa&) = delete;
  ScopedIsa& operator=(const ScopedIsa&) = delete;

 private:
  Isa previous_;
};

double dot(std::span<const double> a, std::span<const double> b);
void axpy(double alpha, std::span<const double> x, std::span<double> y);
void affine(double offset, std::span<const double> scale, std::span<const double> x,
            std::span<double> out);
void add(std::span<const double> x, std::span<double> acc);

}  // namespace tvc::kernels
