#include "tvc/estimator.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <thread>

#include "tvc/errors.hpp"
#include "tvc/kernels.hpp"
#include "tvc/text_io.hpp"

namespace tvc {

IntervalFit fit_interval(const Matrix& x_prev, std::span<const double> dy, const QrOptions& options) {
  const std::size_t n = x_prev.rows();
  const std::size_t d = x_prev.cols();
  if (dy.size() != n) throw DimensionMismatch("dy has " + std::to_string(dy.size()) + " entries, design has " + std::to_string(n) + " rows");
  if (n < d + 2) {
    throw InsufficientObservations("need at least " + std::to_string(d + 2) + " observations for " +
                                   std::to_string(d) + " regressors, have " + std::to_string(n));
  }

  Matrix design(n, d + 1, 1.0);
  for (std::size_t j = 0; j < d; ++j) std::copy_n(x_prev.col(j).begin(), n, design.col(j + 1).begin());
  const LeastSquaresSolution sol = solve_least_squares(std::move(design), dy, 1, options);

  IntervalFit fit;
  fit.alpha = sol.coefficients[0];
  fit.beta.assign(sol.coefficients.begin() + 1, sol.coefficients.end());
  fit.condition = sol.condition;
  fit.dof = static_cast<int>(n - d - 1);

  std::vector<double> fitted(n, fit.alpha);
  for (std::size_t j = 0; j < d; ++j) kernels::axpy(fit.beta[j], x_prev.col(j), fitted);
  fit.residuals.resize(n);
  for (std::size_t i = 0; i < n; ++i) fit.residuals[i] = dy[i] - fitted[i];

  double mean = 0.0;
  for (double v : dy) mean += v;
  mean /= static_cast<double>(n);
  double sst = 0.0;
  for (double v : dy) sst += (v - mean) * (v - mean);
  const double ssr = kernels::dot(fit.residuals, fit.residuals);
  fit.r_squared = sst > 0.0 ? 1.0 - ssr / sst : std::numeric_limits<double>::quiet_NaN();
  return fit;
}

Matrix design_at(const PanelDataset& panel, std::size_t t) {
  Matrix x(panel.n_countries(), panel.n_vars());
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    for (std::size_t j = 0; j < panel.n_vars(); ++j) x(i, j) = panel.value(i, t, j);
  }
  return x;
}

PathFit fit_path(const PanelDataset& panel, const GrowthSeries& growth, const FitOptions& options) {
  const std::size_t n = panel.n_countries();
  const std::size_t intervals = panel.n_years() - 1;
  if (growth.deltas.rows() != n || growth.deltas.cols() != intervals) {
    throw DimensionMismatch("growth series does not match the panel's countries x intervals");
  }

  std::vector<IntervalFit> fits(intervals);
  std::vector<std::exception_ptr> errors(intervals);
  auto run = [&](std::size_t t) {
    try {
      fits[t] = fit_interval(design_at(panel, t), growth.deltas.col_copy(t), options.qr);
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  const unsigned workers = std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(intervals)));
  if (workers == 1) {
    for (std::size_t t = 0; t < intervals; ++t) run(t);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < intervals; t += workers) run(t);
      });
    }
  }

  // report the earliest failing interval regardless of scheduling
  for (std::size_t t = 0; t < intervals; ++t) {
    if (!errors[t]) continue;
    const std::string where = "interval " + std::to_string(panel.year(t)) + "->" + std::to_string(panel.year(t + 1));
    try {
      std::rethrow_exception(errors[t]);
    } catch (const RankDeficient& e) {
      const std::string name = e.column() == 0 ? "intercept" : panel.specs()[e.column() - 1].code;
      throw RankDeficient(e.column(), where + ": column " + name + " rank deficient: " + e.what());
    } catch (const InsufficientObservations& e) {
      throw InsufficientObservations(where + ": " + e.what());
    }
  }

  PathFit out;
  out.path.first_year = panel.first_year();
  for (const auto& spec : panel.specs()) out.path.codes.push_back(spec.code);
  out.diagnostics.residuals = Grid(n, intervals);
  for (std::size_t t = 0; t < intervals; ++t) {
    out.path.alpha.push_back(fits[t].alpha);
    out.path.beta.push_back(std::move(fits[t].beta));
    out.diagnostics.r_squared.push_back(fits[t].r_squared);
    out.diagnostics.condition.push_back(fits[t].condition);
    out.diagnostics.dof.push_back(fits[t].dof);
    for (std::size_t i = 0; i < n; ++i) out.diagnostics.residuals(i, t) = fits[t].residuals[i];
  }
  return out;
}

std::string coefficients_csv(const CoefficientPath& path, const FitDiagnostics& diagnostics) {
  std::vector<std::string> header{"interval_start", "interval_end", "alpha"};
  for (const auto& code : path.codes) header.push_back("beta_" + code);
  header.insert(header.end(), {"r_squared", "condition"});
  CsvBuilder csv(header);
  for (std::size_t t = 0; t < path.n_intervals(); ++t) {
    std::vector<std::string> row{std::to_string(path.interval_start(t)), std::to_string(path.interval_end(t)),
                                 format_sig6(path.alpha[t])};
    for (double b : path.beta[t]) row.push_back(format_sig6(b));
    row.push_back(format_sig6(diagnostics.r_squared[t]));
    row.push_back(format_sig6(diagnostics.condition[t]));
    csv.row(row);
  }
  return csv.str();
}

std::string diagnostics_csv(const CoefficientPath& path, const FitDiagnostics& diagnostics) {
  CsvBuilder csv({"interval_start", "interval_end", "dof", "r_squared", "condition", "residual_sum", "max_abs_residual"});
  for (std::size_t t = 0; t < path.n_intervals(); ++t) {
    double sum = 0.0;
    double max_abs = 0.0;
    for (std::size_t i = 0; i < diagnostics.residuals.rows(); ++i) {
      sum += diagnostics.residuals(i, t);
      max_abs = std::max(max_abs, std::fabs(diagnostics.residuals(i, t)));
    }
    csv.row({std::to_string(path.interval_start(t)), std::to_string(path.interval_end(t)),
             std::to_string(diagnostics.dof[t]), format_sig6(diagnostics.r_squared[t]),
             format_sig6(diagnostics.condition[t]), format_sig6(sum), format_sig6(max_abs)});
  }
  return csv.str();
}

std::string residuals_csv(const PanelDataset& panel, const CoefficientPath& path, const FitDiagnostics& diagnostics) {
  CsvBuilder csv({"country", "interval_start", "interval_end", "residual"});
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    for (std::size_t t = 0; t < path.n_intervals(); ++t) {
      csv.row({panel.countries()[i], std::to_string(path.interval_start(t)), std::to_string(path.interval_end(t)),
               format_sig6(diagnostics.residuals(i, t))});
    }
  }
  return csv.str();
}

}  // namespace tvc
