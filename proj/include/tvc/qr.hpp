#pragma once
// Least squares through a column-pivoted Householder QR factorization.

#include <cstddef>
#include <span>
#include <vector>

#include "tvc/containers.hpp"

namespace tvc {

struct QrOptions {
  /// Fits whose 1-norm condition estimate of R exceeds this are rejected.
  double condition_limit = 1e12;
};

struct LeastSquaresSolution {
  std::vector<double> coefficients;  // in the original column order
  /// kappa_1(R) = ||R||_1 ||R^-1||_1 of the triangular factor.
  double condition = 0.0;
  std::vector<std::size_t> pivots;   // pivots[k] = original column in position k
};

/// Minimizes ||design * b - rhs||_2. The first `fixed_leading` columns keep
/// their position; the rest are pivoted by largest remaining norm. A pivot
/// with |R_kk| <= rows * eps * (largest column norm), or a condition estimate
/// above the limit, raises RankDeficient naming the original column.
LeastSquaresSolution solve_least_squares(Matrix design, std::span<const double> rhs,
                                         std::size_t fixed_leading = 0, const QrOptions& options = {});

}  // namespace tvc
