#pragma once
// Panel domain types: variable metadata, the balanced country x year x
// variable cube, empirical growth, and rank tables.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tvc/containers.hpp"

namespace tvc {

enum class Transform { level, cumulative };

std::string_view transform_name(Transform t) noexcept;
std::optional<Transform> parse_transform(std::string_view name) noexcept;

struct VariableSpec {
  std::string code;
  std::string label;
  Transform transform = Transform::level;
  std::string unit;
  /// The variable whose first difference is the regression target (X1).
  bool target = false;

  friend bool operator==(const VariableSpec&, const VariableSpec&) = default;
};

/// One long-format observation.
struct Observation {
  std::string country;
  int year = 0;
  std::string code;
  double value = 0.0;

  friend bool operator==(const Observation&, const Observation&) = default;
};

/// Balanced N x T x d panel. Immutable once constructed; the constructor
/// enforces every structural invariant.
class PanelDataset {
 public:
  PanelDataset(std::vector<std::string> countries, int first_year, std::size_t n_years,
               std::vector<VariableSpec> specs, Cube values);

  std::size_t n_countries() const noexcept { return countries_.size(); }
  std::size_t n_years() const noexcept { return n_years_; }
  std::size_t n_vars() const noexcept { return specs_.size(); }

  const std::vector<std::string>& countries() const noexcept { return countries_; }
  int first_year() const noexcept { return first_year_; }
  int last_year() const noexcept { return first_year_ + static_cast<int>(n_years_) - 1; }
  int year(std::size_t t) const noexcept { return first_year_ + static_cast<int>(t); }
  std::vector<int> years() const;
  std::optional<std::size_t> year_index(int year) const noexcept;

  const std::vector<VariableSpec>& specs() const noexcept { return specs_; }
  std::size_t target_index() const noexcept { return target_; }
  std::optional<std::size_t> variable_index(std::string_view code) const noexcept;
  std::optional<std::size_t> country_index(std::string_view country) const noexcept;

  double value(std::size_t i, std::size_t t, std::size_t j) const { return values_(i, t, j); }
  /// All d regressors of country i in year index t.
  std::span<const double> regressors(std::size_t i, std::size_t t) const { return values_.fibre(i, t); }
  const Cube& values() const noexcept { return values_; }

  /// x_{i, t, target} for all i, t.
  Grid target_levels() const;

 private:
  std::vector<std::string> countries_;
  int first_year_;
  std::size_t n_years_;
  std::vector<VariableSpec> specs_;
  std::size_t target_ = 0;
  Cube values_;
};

/// Optional clipping of the common year window.
struct YearWindow {
  std::optional<int> first;
  std::optional<int> last;
};

/// Assembles a balanced panel from long-format observations.
///
/// The year window is the intersection, over variables, of each variable's
/// observed year span (so sources with different coverage align), clipped by
/// `window`. Every (country, year, code) cell inside it must be present.
/// Each spec's transform is applied to the windowed series before assembly.
/// Countries are ordered lexicographically; variables follow `specs`.
PanelDataset build_panel(std::span<const Observation> rows, const std::vector<VariableSpec>& specs,
                         const YearWindow& window = {});

/// Long-format serialization of the (already transformed) panel values.
std::vector<Observation> to_rows(const PanelDataset& panel);

/// Copies of `specs` with every transform set to level; pairs with to_rows
/// for re-assembly without re-applying transforms.
std::vector<VariableSpec> as_level_specs(std::vector<VariableSpec> specs);

/// Per-interval changes of the target variable. deltas(i, t) is the change
/// from year t to t+1, rounded; rounding(i, t) holds the exact low-order
/// remainder so that deltas + rounding equals the true difference.
struct GrowthSeries {
  Grid deltas;
  Grid rounding;
};

GrowthSeries empirical_growth(const PanelDataset& panel);

/// Yearly values of one country, for ranking.
struct CountrySeries {
  std::string country;
  std::vector<std::pair<int, double>> points;
};

struct RankTable {
  std::vector<int> years;
  std::vector<std::string> countries;
  /// ranks[y][i]: rank of countries[i] in years[y]; 1 = highest value.
  std::vector<std::vector<int>> ranks;
  std::vector<std::vector<double>> values;
};

/// Ranks countries per year, descending by value; ties go to the
/// lexicographically smaller country code.
RankTable rank_table(const std::vector<CountrySeries>& series);

}  // namespace tvc
