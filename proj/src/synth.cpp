#include "tvc/synth.hpp"

#include <cmath>
#include <numbers>

#include "tvc/errors.hpp"

namespace tvc {
namespace {

// splitmix64: fully specified, so identical seeds give identical panels on any platform.
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

std::string code_for(std::size_t j) { return "X" + std::to_string(j + 1); }

double correlation(const Cube& values, std::size_t t, std::size_t a, std::size_t b) {
  const std::size_t n = values.dim0();
  double ma = 0.0;
  double mb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    ma += values(i, t, a);
    mb += values(i, t, b);
  }
  ma /= static_cast<double>(n);
  mb /= static_cast<double>(n);
  double sab = 0.0;
  double saa = 0.0;
  double sbb = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = values(i, t, a) - ma;
    const double db = values(i, t, b) - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) return 1.0;
  return sab / std::sqrt(saa * sbb);
}

bool well_spread(const Cube& values, std::size_t t, double limit) {
  const std::size_t d = values.dim2();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      if (std::fabs(correlation(values, t, a, b)) >= limit) return false;
    }
  }
  // a constant column would be collinear with the intercept
  for (std::size_t a = 0; a < d; ++a) {
    bool constant = true;
    for (std::size_t i = 1; i < values.dim0(); ++i) constant = constant && values(i, t, a) == values(0, t, a);
    if (constant) return false;
  }
  return true;
}

void validate(const SynthSpec& spec) {
  if (spec.n_vars == 0) throw DataError("synthetic panel needs at least one variable");
  if (spec.n_vars + 1 >= spec.n_countries) {
    throw DataError("synthetic panel needs n_vars < n_countries - 1 (have d=" + std::to_string(spec.n_vars) +
                    ", N=" + std::to_string(spec.n_countries) + ")");
  }
  if (spec.n_years < 2) throw DataError("synthetic panel needs at least two years");
  if (spec.noise_scale < 0.0 || !std::isfinite(spec.noise_scale)) throw DataError("noise_scale must be finite and >= 0");
}

ColumnRange range_for(const std::vector<ColumnRange>& ranges, std::size_t j) {
  // j counts non-target columns, starting at 0 for X2
  return ranges[j % ranges.size()];
}

}  // namespace

std::uint64_t SplitRng::next() noexcept {
  std::uint64_t z = (state_ += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitRng::uniform() noexcept { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

double SplitRng::normal() noexcept {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  double u1 = uniform();
  while (u1 <= 0.0) u1 = uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  spare_ = r * std::sin(2.0 * std::numbers::pi * u2);
  return r * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<ColumnRange> default_ranges() {
  return {
      {50.0, 150.0},  // price level index
      {0.0, 200.0},   // accumulated FDI
      {50.0, 200.0},  // trade
      {20.0, 250.0},  // accumulated capital formation
      {10.0, 100.0},  // government debt
      {30.0, 200.0},  // private debt
  };
}

CoefficientPath default_path(const SynthSpec& spec) {
  validate(spec);
  const auto ranges = spec.ranges.empty() ? default_ranges() : spec.ranges;
  SplitRng rng(spec.seed ^ 0xC0EFF1C1E57ull);
  CoefficientPath path;
  path.first_year = spec.first_year;
  for (std::size_t j = 0; j < spec.n_vars; ++j) path.codes.push_back(code_for(j));
  const double target_mid = 0.5 * (spec.target_start.lo + spec.target_start.hi);
  for (std::size_t t = 0; t + 1 < spec.n_years; ++t) {
    std::vector<double> beta(spec.n_vars);
    beta[0] = -rng.uniform(0.02, 0.08);
    double drift = beta[0] * target_mid;
    for (std::size_t j = 1; j < spec.n_vars; ++j) {
      const ColumnRange r = range_for(ranges, j - 1);
      const double mid = 0.5 * (r.lo + r.hi);
      const double sign = rng.uniform() < 0.5 ? -1.0 : 1.0;
      beta[j] = sign * rng.uniform(0.5, 2.0) / mid;
      drift += beta[j] * mid;
    }
    path.alpha.push_back(rng.uniform(1.0, 5.0) - drift);
    path.beta.push_back(std::move(beta));
  }
  return path;
}

SynthPanel generate(const SynthSpec& spec) {
  validate(spec);
  const auto ranges = spec.ranges.empty() ? default_ranges() : spec.ranges;
  CoefficientPath path = spec.path ? *spec.path : default_path(spec);
  if (path.n_intervals() != spec.n_years - 1 || path.n_vars() != spec.n_vars) {
    throw DimensionMismatch("generating path does not match the synthetic panel dimensions");
  }
  path.first_year = spec.first_year;

  const std::size_t n = spec.n_countries;
  const std::size_t d = spec.n_vars;
  SplitRng rng(spec.seed);
  SplitRng noise_rng(spec.seed ^ 0x5EEDF00Dull);
  Cube values(n, spec.n_years, d);

  for (std::size_t i = 0; i < n; ++i) values(i, 0, 0) = rng.uniform(spec.target_start.lo, spec.target_start.hi);

  for (std::size_t t = 0; t < spec.n_years; ++t) {
    std::size_t attempts = 0;
    while (true) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 1; j < d; ++j) {
          const ColumnRange r = range_for(ranges, j - 1);
          values(i, t, j) = rng.uniform(r.lo, r.hi);
        }
      }
      if (well_spread(values, t, spec.max_correlation)) break;
      if (++attempts >= spec.max_attempts) {
        throw DegenerateDesign("could not draw regressors with pairwise |correlation| < " +
                               std::to_string(spec.max_correlation) + " for year " +
                               std::to_string(spec.first_year + static_cast<int>(t)));
      }
    }
    if (t + 1 == spec.n_years) break;
    for (std::size_t i = 0; i < n; ++i) {
      double dy = path.alpha[t];
      for (std::size_t j = 0; j < d; ++j) dy += path.beta[t][j] * values(i, t, j);
      if (spec.noise_scale > 0.0) dy += spec.noise_scale * noise_rng.normal();
      values(i, t + 1, 0) = values(i, t, 0) + dy;
    }
  }

  std::vector<std::string> countries;
  for (std::size_t i = 0; i < n; ++i) {
    std::string c = "C" + std::to_string(i + 1);
    if (i + 1 < 10) c.insert(1, "0");
    countries.push_back(std::move(c));
  }
  std::vector<VariableSpec> specs;
  for (std::size_t j = 0; j < d; ++j) {
    specs.push_back({code_for(j), j == 0 ? "synthetic target level" : "synthetic regressor", Transform::level,
                     j == 0 ? "index" : "units", j == 0});
  }
  return {PanelDataset(std::move(countries), spec.first_year, spec.n_years, std::move(specs), std::move(values)),
          std::move(path)};
}

Manifest synth_manifest(const SynthPanel& synth) {
  Manifest m;
  m.variables = synth.panel.specs();
  m.base_year = synth.panel.first_year();
  if (synth.panel.n_vars() > 1) m.price_code = synth.panel.specs()[1].code;
  return m;
}

}  // namespace tvc
