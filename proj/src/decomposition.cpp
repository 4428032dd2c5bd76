#include "tvc/decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "tvc/errors.hpp"
#include "tvc/kernels.hpp"

namespace tvc {

Cube component_deltas(const CoefficientPath& path, const PanelDataset& panel) {
  const std::size_t n = panel.n_countries();
  const std::size_t d = panel.n_vars();
  const std::size_t intervals = panel.n_years() - 1;
  if (path.n_intervals() != intervals || path.n_vars() != d) {
    throw DimensionMismatch("coefficient path (" + std::to_string(path.n_intervals()) + " intervals, " +
                            std::to_string(path.n_vars()) + " variables) does not cover the panel (" +
                            std::to_string(intervals) + ", " + std::to_string(d) + ")");
  }
  for (const auto& b : path.beta) {
    if (b.size() != d) throw DimensionMismatch("beta vector length differs from panel d");
  }
  Cube out(n, intervals, d);
  const double share = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < intervals; ++t) {
      kernels::affine(path.alpha[t] * share, path.beta[t], panel.regressors(i, t), out.fibre(i, t));
    }
  }
  return out;
}

Grid regressed_growth(const Cube& deltas) {
  Grid out(deltas.dim0(), deltas.dim1());
  for (std::size_t i = 0; i < deltas.dim0(); ++i) {
    for (std::size_t t = 0; t < deltas.dim1(); ++t) {
      double s = 0.0;
      for (double v : deltas.fibre(i, t)) s += v;
      out(i, t) = s;
    }
  }
  return out;
}

Cube component_paths(const Cube& deltas, std::span<const double> base_value) {
  const std::size_t n = deltas.dim0();
  const std::size_t d = deltas.dim2();
  if (base_value.size() != n) throw DimensionMismatch("one base value per country required");
  Cube kappa(n, deltas.dim1() + 1, d);
  const double share = 1.0 / static_cast<double>(d);
  for (std::size_t i = 0; i < n; ++i) {
    auto first = kappa.fibre(i, 0);
    std::fill(first.begin(), first.end(), base_value[i] * share);
    for (std::size_t t = 0; t < deltas.dim1(); ++t) {
      auto next = kappa.fibre(i, t + 1);
      std::copy(kappa.fibre(i, t).begin(), kappa.fibre(i, t).end(), next.begin());
      kernels::add(deltas.fibre(i, t), next);
    }
  }
  return kappa;
}

double regressed_level(const Cube& kappa, std::span<const double> base_value, std::size_t i, std::size_t t) {
  if (t == 0) return base_value[i];
  double s = 0.0;
  for (double v : kappa.fibre(i, t)) s += v;
  return s;
}

DecompositionResult decompose(const CoefficientPath& path, const PanelDataset& panel) {
  DecompositionResult out;
  out.base_value.resize(panel.n_countries());
  for (std::size_t i = 0; i < panel.n_countries(); ++i) out.base_value[i] = panel.value(i, 0, panel.target_index());
  out.component_deltas = component_deltas(path, panel);
  out.kappa = component_paths(out.component_deltas, out.base_value);
  return out;
}

std::optional<double> relative_contribution(std::span<const double> kappa_fibre, std::size_t component) {
  if (component >= kappa_fibre.size()) throw DimensionMismatch("component index out of range");
  const double denom = kernels::dot(kappa_fibre, kappa_fibre);
  if (denom == 0.0) return std::nullopt;
  const double k = kappa_fibre[component];
  const double share = (k * k) / denom;
  return k < 0.0 ? -share : share;
}

std::vector<std::vector<std::optional<double>>> relative_contribution(const Cube& kappa, std::size_t component) {
  std::vector<std::vector<std::optional<double>>> out(kappa.dim0());
  for (std::size_t i = 0; i < kappa.dim0(); ++i) {
    out[i].reserve(kappa.dim1());
    for (std::size_t t = 0; t < kappa.dim1(); ++t) out[i].push_back(relative_contribution(kappa.fibre(i, t), component));
  }
  return out;
}

std::optional<std::size_t> ContributionTable::column_index(std::string_view name) const {
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c] == name) return c;
  }
  return std::nullopt;
}

ContributionTable contribution_table(const PanelDataset& panel, const DecompositionResult& decomposition,
                                     const Grid& error_acc, int year) {
  const auto t = panel.year_index(year);
  if (!t) throw DataError("report year " + std::to_string(year) + " is outside the panel");
  const std::size_t n = panel.n_countries();
  const std::size_t d = panel.n_vars();
  if (decomposition.kappa.dim0() != n || decomposition.kappa.dim1() != panel.n_years() || decomposition.kappa.dim2() != d ||
      error_acc.rows() != n || error_acc.cols() != panel.n_years()) {
    throw DimensionMismatch("decomposition does not match the panel");
  }

  // unordered: components 0..d-1, then Total
  std::vector<std::vector<double>> raw(n, std::vector<double>(d + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < d; ++j) raw[i][j] = decomposition.kappa(i, *t, j);
    raw[i][d] = regressed_level(decomposition.kappa, decomposition.base_value, i, *t);
  }
  std::vector<double> mean(d + 1, 0.0);
  for (std::size_t c = 0; c <= d; ++c) {
    for (std::size_t i = 0; i < n; ++i) mean[c] += raw[i][c];
    mean[c] /= static_cast<double>(n);
  }
  std::vector<std::size_t> order(d + 1);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return mean[a] > mean[b]; });

  ContributionTable table;
  table.year = year;
  table.countries = panel.countries();
  for (std::size_t c : order) table.columns.push_back(c == d ? std::string(kTotalColumn) : panel.specs()[c].code);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> row;
    for (std::size_t c : order) row.push_back(raw[i][c]);
    table.values.push_back(std::move(row));
    table.error_acc.push_back(error_acc(i, *t));
  }
  return table;
}

}  // namespace tvc
