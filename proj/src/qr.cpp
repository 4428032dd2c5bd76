#include "tvc/qr.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "tvc/errors.hpp"
#include "tvc/kernels.hpp"

namespace tvc {
namespace {

double trailing_norm2(const Matrix& a, std::size_t col, std::size_t from) {
  const auto x = a.col(col).subspan(from);
  return kernels::dot(x, x);
}

// ||R||_1 * ||R^-1||_1 for the leading p x p upper triangle of `qr`.
double triangular_condition(const Matrix& qr, std::size_t p) {
  Matrix inv(p, p);
  for (std::size_t c = 0; c < p; ++c) {
    // solve R x = e_c by back substitution
    for (std::size_t k = c + 1; k-- > 0;) {
      double s = k == c ? 1.0 : 0.0;
      for (std::size_t m = k + 1; m <= c; ++m) s -= qr(k, m) * inv(m, c);
      inv(k, c) = s / qr(k, k);
    }
  }
  double norm_r = 0.0;
  double norm_inv = 0.0;
  for (std::size_t c = 0; c < p; ++c) {
    double sr = 0.0;
    double si = 0.0;
    for (std::size_t k = 0; k <= c; ++k) {
      sr += std::fabs(qr(k, c));
      si += std::fabs(inv(k, c));
    }
    norm_r = std::max(norm_r, sr);
    norm_inv = std::max(norm_inv, si);
  }
  return norm_r * norm_inv;
}

}  // namespace

LeastSquaresSolution solve_least_squares(Matrix a, std::span<const double> rhs, std::size_t fixed_leading,
                                         const QrOptions& options) {
  const std::size_t m = a.rows();
  const std::size_t p = a.cols();
  if (rhs.size() != m) throw DimensionMismatch("right-hand side length does not match design rows");
  if (m < p) throw InsufficientObservations("fewer rows than columns");

  std::vector<std::size_t> perm(p);
  for (std::size_t k = 0; k < p; ++k) perm[k] = k;

  double max_norm = 0.0;
  for (std::size_t c = 0; c < p; ++c) max_norm = std::max(max_norm, std::sqrt(trailing_norm2(a, c, 0)));
  const double tol = static_cast<double>(m) * std::numeric_limits<double>::epsilon() * max_norm;

  std::vector<double> y(rhs.begin(), rhs.end());
  std::vector<double> v(m);

  for (std::size_t k = 0; k < p; ++k) {
    if (k >= fixed_leading) {
      std::size_t best = k;
      double best_norm = trailing_norm2(a, k, k);
      for (std::size_t c = k + 1; c < p; ++c) {
        const double n2 = trailing_norm2(a, c, k);
        if (n2 > best_norm) {
          best_norm = n2;
          best = c;
        }
      }
      if (best != k) {
        std::swap_ranges(a.col(k).begin(), a.col(k).end(), a.col(best).begin());
        std::swap(perm[k], perm[best]);
      }
    }

    const auto x = a.col(k).subspan(k);
    const double norm = std::sqrt(kernels::dot(x, x));
    if (!(norm > tol)) {
      throw RankDeficient(perm[k], "column " + std::to_string(perm[k]) +
                                       " is linearly dependent on the preceding columns (pivot " +
                                       std::to_string(norm) + " <= tolerance " + std::to_string(tol) + ")");
    }
    const double alpha = x[0] >= 0.0 ? -norm : norm;
    const auto hv = std::span<double>(v).first(m - k);
    std::copy(x.begin(), x.end(), hv.begin());
    hv[0] -= alpha;
    const double tau = 2.0 / kernels::dot(hv, hv);

    for (std::size_t c = k + 1; c < p; ++c) {
      const auto col = a.col(c).subspan(k);
      kernels::axpy(-tau * kernels::dot(hv, col), hv, col);
    }
    const auto ys = std::span<double>(y).subspan(k);
    kernels::axpy(-tau * kernels::dot(hv, ys), hv, ys);

    x[0] = alpha;
    std::fill(x.begin() + 1, x.end(), 0.0);
  }

  LeastSquaresSolution out;
  out.condition = triangular_condition(a, p);
  if (!(out.condition <= options.condition_limit)) {
    std::size_t weakest = 0;
    for (std::size_t k = 1; k < p; ++k) {
      if (std::fabs(a(k, k)) < std::fabs(a(weakest, weakest))) weakest = k;
    }
    throw RankDeficient(perm[weakest], "design condition estimate " + std::to_string(out.condition) +
                                           " exceeds limit; weakest column " + std::to_string(perm[weakest]));
  }

  std::vector<double> z(p);
  for (std::size_t k = p; k-- > 0;) {
    double s = y[k];
    for (std::size_t c = k + 1; c < p; ++c) s -= a(k, c) * z[c];
    z[k] = s / a(k, k);
  }
  out.coefficients.assign(p, 0.0);
  for (std::size_t k = 0; k < p; ++k) out.coefficients[perm[k]] = z[k];
  out.pivots = std::move(perm);
  return out;
}

}  // namespace tvc
