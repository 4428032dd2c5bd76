#pragma once
// Time-varying coefficient panel least squares. Every year-to-year interval
// has its own free intercept and slope vector, so the pooled problem splits
// into T-1 independent cross-sectional regressions
//
//   dy[i][t] = alpha_t + sum_j beta_{t,j} * x[i][t][j] + e[i][t].

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "tvc/containers.hpp"
#include "tvc/panel.hpp"
#include "tvc/qr.hpp"

namespace tvc {

struct IntervalFit {
  double alpha = 0.0;
  std::vector<double> beta;
  /// dy - fitted, in input order.
  std::vector<double> residuals;
  double condition = 0.0;
  /// NaN when dy has no variation.
  double r_squared = 0.0;
  int dof = 0;
};

/// OLS of dy on [1 | x_prev]. x_prev is N x d (one row per country).
/// Throws InsufficientObservations when N < d + 2, RankDeficient when the
/// augmented design is not numerically full rank.
IntervalFit fit_interval(const Matrix& x_prev, std::span<const double> dy, const QrOptions& options = {});

struct CoefficientPath {
  int first_year = 0;  // start year of interval 0
  std::vector<std::string> codes;
  std::vector<double> alpha;              // [interval]
  std::vector<std::vector<double>> beta;  // [interval][variable]

  std::size_t n_intervals() const noexcept { return alpha.size(); }
  std::size_t n_vars() const noexcept { return codes.size(); }
  int interval_start(std::size_t t) const noexcept { return first_year + static_cast<int>(t); }
  int interval_end(std::size_t t) const noexcept { return first_year + static_cast<int>(t) + 1; }

  friend bool operator==(const CoefficientPath&, const CoefficientPath&) = default;
};

struct FitDiagnostics {
  Grid residuals;  // N x (T-1)
  std::vector<double> r_squared;
  std::vector<double> condition;
  std::vector<int> dof;
};

struct PathFit {
  CoefficientPath path;
  FitDiagnostics diagnostics;
};

struct FitOptions {
  QrOptions qr;
  /// Intervals are independent; results do not depend on the thread count.
  unsigned threads = 1;
};

/// Regressor matrix of all countries at year index t (N x d).
Matrix design_at(const PanelDataset& panel, std::size_t t);

/// Fits every interval t -> t+1 by regressing growth.deltas(., t) on the
/// panel's regressors at year index t. Errors name the interval and column.
PathFit fit_path(const PanelDataset& panel, const GrowthSeries& growth, const FitOptions& options = {});

/// `interval_start,interval_end,alpha,beta_<code>...,r_squared,condition`
std::string coefficients_csv(const CoefficientPath& path, const FitDiagnostics& diagnostics);
/// `interval_start,interval_end,dof,r_squared,condition,residual_sum,max_abs_residual`
std::string diagnostics_csv(const CoefficientPath& path, const FitDiagnostics& diagnostics);
/// `country,interval_start,interval_end,residual`
std::string residuals_csv(const PanelDataset& panel, const CoefficientPath& path, const FitDiagnostics& diagnostics);

}  // namespace tvc
