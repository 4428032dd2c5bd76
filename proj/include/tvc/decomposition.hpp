#pragma once
// Growth decomposition into per-variable contributions.
//
//   component delta  dy[i][t][j] = alpha_t / d + beta_{t,j} * x[i][t][j]
//   component path   kappa[i][t][j] = base[i] / d + sum_{tau < t} dy[i][tau][j]
//   relative share   gamma_i(t) = sgn(kappa_j) kappa_j^2 / sum_k kappa_k^2
//
// The intercept is split equally across the d components, so individual
// component levels depend on d; only their sum is model-invariant.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tvc/containers.hpp"
#include "tvc/estimator.hpp"
#include "tvc/panel.hpp"

namespace tvc {

struct DecompositionResult {
  Cube component_deltas;  // N x (T-1) x d
  Cube kappa;             // N x T x d
  std::vector<double> base_value;
};

/// N x (T-1) x d contributions of each regressor (plus alpha/d) per interval.
Cube component_deltas(const CoefficientPath& path, const PanelDataset& panel);

/// Regressed growth per interval: the sum over components in ascending j.
/// This is the canonical evaluation of the fitted growth used downstream.
Grid regressed_growth(const Cube& deltas);

/// Cumulative component paths seeded at base/d; kappa has one more year than deltas.
Cube component_paths(const Cube& deltas, std::span<const double> base_value);

/// Regressed GDP level from the component paths: base[i] at the base year,
/// the ascending-j sum of kappa afterwards.
double regressed_level(const Cube& kappa, std::span<const double> base_value, std::size_t i, std::size_t t);

/// Uses the target variable's first-year level as each country's base value.
DecompositionResult decompose(const CoefficientPath& path, const PanelDataset& panel);

/// gamma for one kappa fibre; nullopt when every component is zero.
std::optional<double> relative_contribution(std::span<const double> kappa_fibre, std::size_t component);

/// gamma_i(t) for every country and year ([i][t]); gaps where all components vanish.
std::vector<std::vector<std::optional<double>>> relative_contribution(const Cube& kappa, std::size_t component);

/// Final-year contribution table. Columns are the d components plus "Total",
/// ordered by their cross-country mean, descending; the accumulated error is
/// carried separately.
struct ContributionTable {
  int year = 0;
  std::vector<std::string> countries;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> values;  // [row][column]
  std::vector<double> error_acc;

  std::optional<std::size_t> column_index(std::string_view name) const;
};

inline constexpr std::string_view kTotalColumn = "Total";

ContributionTable contribution_table(const PanelDataset& panel, const DecompositionResult& decomposition,
                                     const Grid& error_acc, int year);

}  // namespace tvc
