#include "tvc/reconstruction.hpp"

#include <algorithm>
#include <vector>

#include "tvc/errors.hpp"
#include "tvc/exact_sum.hpp"
#include "tvc/kernels.hpp"

namespace tvc {
namespace {

std::vector<double> base_values(const PanelDataset& panel) {
  std::vector<double> base(panel.n_countries());
  for (std::size_t i = 0; i < panel.n_countries(); ++i) base[i] = panel.value(i, 0, panel.target_index());
  return base;
}

}  // namespace

StaticReconstruction reconstruct_static(const PanelDataset& panel, const GrowthSeries& growth,
                                        const CoefficientPath& path) {
  const std::size_t n = panel.n_countries();
  const std::size_t years = panel.n_years();
  if (growth.deltas.rows() != n || growth.deltas.cols() != years - 1 || growth.rounding.rows() != n ||
      growth.rounding.cols() != years - 1) {
    throw DimensionMismatch("growth series does not match the panel");
  }
  const std::vector<double> base = base_values(panel);
  const DecompositionResult dec = decompose(path, panel);

  StaticReconstruction out{Grid(n, years), Grid(n, years), Grid(n, years)};
  for (std::size_t i = 0; i < n; ++i) {
    ExactSum running;
    running.add(base[i]);
    out.gdp_data(i, 0) = base[i];
    for (std::size_t t = 0; t + 1 < years; ++t) {
      running.add(growth.deltas(i, t));
      running.add(growth.rounding(i, t));
      out.gdp_data(i, t + 1) = running.value();
    }
    for (std::size_t t = 0; t < years; ++t) {
      out.gdp_regr(i, t) = regressed_level(dec.kappa, base, i, t);
      out.error_acc(i, t) = out.gdp_regr(i, t) - out.gdp_data(i, t);
    }
  }
  return out;
}

Grid reconstruct_dynamic(const PanelDataset& panel, const CoefficientPath& path) {
  const std::size_t n = panel.n_countries();
  const std::size_t years = panel.n_years();
  const std::size_t d = panel.n_vars();
  if (path.n_intervals() != years - 1 || path.n_vars() != d) {
    throw DimensionMismatch("coefficient path does not cover the panel");
  }
  const std::size_t target = panel.target_index();
  const std::vector<double> base = base_values(panel);
  const double share = 1.0 / static_cast<double>(d);

  Grid full(n, years);
  std::vector<double> kappa(d);
  std::vector<double> x(d);
  std::vector<double> delta(d);
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(kappa.begin(), kappa.end(), base[i] * share);
    double level = base[i];
    full(i, 0) = level;
    for (std::size_t t = 0; t + 1 < years; ++t) {
      const auto empirical = panel.regressors(i, t);
      std::copy(empirical.begin(), empirical.end(), x.begin());
      x[target] = level;
      kernels::affine(path.alpha[t] * share, path.beta[t], x, delta);
      kernels::add(delta, kappa);
      level = 0.0;
      for (double v : kappa) level += v;
      full(i, t + 1) = level;
    }
  }
  return full;
}

ReconstructionSet reconstruct(const PanelDataset& panel, const GrowthSeries& growth, const CoefficientPath& path) {
  StaticReconstruction s = reconstruct_static(panel, growth, path);
  return {std::move(s.gdp_data), std::move(s.gdp_regr), reconstruct_dynamic(panel, path), std::move(s.error_acc)};
}

}  // namespace tvc
