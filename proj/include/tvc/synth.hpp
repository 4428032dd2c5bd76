#pragma once
// Synthetic panels generated from a known coefficient path. The target
// variable evolves exactly by the regression equation (plus optional seeded
// noise), so fitting the generated panel must recover the path.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tvc/estimator.hpp"
#include "tvc/ingest.hpp"
#include "tvc/panel.hpp"

namespace tvc {

struct ColumnRange {
  double lo = 0.0;
  double hi = 1.0;
};

struct SynthSpec {
  std::size_t n_countries = 11;
  std::size_t n_years = 30;
  std::size_t n_vars = 7;
  int first_year = 1995;
  std::uint64_t seed = 42;
  double noise_scale = 0.0;
  /// Generating path; derived from the seed when empty.
  std::optional<CoefficientPath> path;
  /// Bounds per non-target column (cycled); defaults mimic index and %-of-GDP ranges.
  std::vector<ColumnRange> ranges;
  /// Initial target levels are drawn from this range.
  ColumnRange target_start{40.0, 120.0};
  double max_correlation = 0.9;
  std::size_t max_attempts = 1000;
};

struct SynthPanel {
  PanelDataset panel;
  CoefficientPath path;
};

/// Default non-target column ranges.
std::vector<ColumnRange> default_ranges();

/// A seeded coefficient path with a mean-reverting target coefficient and
/// modest contributions from the other regressors.
CoefficientPath default_path(const SynthSpec& spec);

/// Throws DataError for an invalid spec (n_vars must be < n_countries - 1),
/// DegenerateDesign if the correlation rejection step is exhausted.
SynthPanel generate(const SynthSpec& spec);

/// Manifest describing a generated panel (all variables level, target X1).
Manifest synth_manifest(const SynthPanel& synth);

/// Seeded 64-bit generator with a platform-independent uniform/normal mapping.
class SplitRng {
 public:
  explicit SplitRng(std::uint64_t seed) noexcept : state_(seed) {}
  std::uint64_t next() noexcept;
  /// Uniform in [0, 1).
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  double normal() noexcept;

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

}  // namespace tvc
