// Runtime selection of the kernel table.

#include <atomic>
#include <cassert>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "variants.hpp"

namespace tvc::kernels {
namespace {

bool cpu_has(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return true;
    case Isa::avx2:
#if defined(TVC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
    case Isa::neon:
#if defined(TVC_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

const KernelTable* initial_table() {
  Isa isa = best_isa();
  if (const char* forced = std::getenv("TVC_ISA")) {
    const std::string name(forced);
    for (Isa candidate : {Isa::scalar, Isa::avx2, Isa::neon}) {
      if (name == isa_name(candidate) && isa_supported(candidate)) isa = candidate;
    }
  }
  return kernel_table(isa);
}

std::atomic<const KernelTable*>& active() {
  static std::atomic<const KernelTable*> table{initial_table()};
  return table;
}

inline const KernelTable& current() { return *active().load(std::memory_order_relaxed); }

}  // namespace

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar:
      return "scalar";
    case Isa::avx2:
      return "avx2";
    case Isa::neon:
      return "neon";
  }
  return "unknown";
}

const KernelTable* kernel_table(Isa isa) noexcept {
  if (!cpu_has(isa)) return nullptr;
  switch (isa) {
    case Isa::scalar:
      return &detail::scalar_table;
    case Isa::avx2:
#if defined(TVC_HAVE_AVX2)
      return &detail::avx2_table;
#else
      return nullptr;
#endif
    case Isa::neon:
#if defined(TVC_HAVE_NEON)
      return &detail::neon_table;
#else
      return nullptr;
#endif
  }
  return nullptr;
}

bool isa_supported(Isa isa) noexcept { return kernel_table(isa) != nullptr; }

Isa best_isa() noexcept {
  if (isa_supported(Isa::avx2)) return Isa::avx2;
  if (isa_supported(Isa::neon)) return Isa::neon;
  return Isa::scalar;
}

Isa active_isa() noexcept { return current().isa; }

void set_active_isa(Isa isa) {
  const KernelTable* table = kernel_table(isa);
  if (table == nullptr) {
    throw std::invalid_argument("kernel variant not available: " + std::string(isa_name(isa)));
  }
  active().store(table, std::memory_order_relaxed);
}

double dot(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size());
  return current().dot(a.data(), b.data(), a.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
  assert(x.size() == y.size());
  current().axpy(alpha, x.data(), y.data(), x.size());
}

void affine(double offset, std::span<const double> scale, std::span<const double> x,
            std::span<double> out) {
  assert(scale.size() == x.size() && x.size() == out.size());
  current().affine(offset, scale.data(), x.data(), out.data(), x.size());
}

void add(std::span<const double> x, std::span<double> acc) {
  assert(x.size() == acc.size());
  current().add(x.data(), acc.data(), x.size());
}

}  // namespace tvc::kernels
