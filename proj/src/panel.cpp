#include "tvc/panel.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>
#include <unordered_set>

#include "tvc/errors.hpp"
#include "tvc/exact_sum.hpp"
#include "tvc/ingest.hpp"

namespace tvc {

std::string_view transform_name(Transform t) noexcept {
  return t == Transform::cumulative ? "cumulative" : "level";
}

std::optional<Transform> parse_transform(std::string_view name) noexcept {
  if (name == "level") return Transform::level;
  if (name == "cumulative") return Transform::cumulative;
  return std::nullopt;
}

PanelDataset::PanelDataset(std::vector<std::string> countries, int first_year, std::size_t n_years,
                           std::vector<VariableSpec> specs, Cube values)
    : countries_(std::move(countries)),
      first_year_(first_year),
      n_years_(n_years),
      specs_(std::move(specs)),
      values_(std::move(values)) {
  if (specs_.empty()) throw DataError("panel needs at least one variable");
  if (n_years_ < 2) throw DataError("panel needs at least two years");
  if (countries_.empty()) throw DataError("panel needs at least one country");
  if (specs_.size() >= countries_.size()) {
    throw DataError("panel needs more countries than variables (d=" + std::to_string(specs_.size()) +
                    ", N=" + std::to_string(countries_.size()) + ")");
  }
  if (values_.dim0() != countries_.size() || values_.dim1() != n_years_ || values_.dim2() != specs_.size()) {
    throw DimensionMismatch("value cube does not match countries x years x variables");
  }
  std::unordered_set<std::string> seen;
  for (const auto& c : countries_) {
    if (!seen.insert(c).second) throw DataError("duplicate country " + c);
  }
  seen.clear();
  std::size_t targets = 0;
  for (std::size_t j = 0; j < specs_.size(); ++j) {
    if (!seen.insert(specs_[j].code).second) throw DataError("duplicate variable code " + specs_[j].code);
    if (specs_[j].target) {
      ++targets;
      target_ = j;
    }
  }
  if (targets != 1) throw DataError("exactly one variable must be the target source");
}

std::vector<int> PanelDataset::years() const {
  std::vector<int> out(n_years_);
  for (std::size_t t = 0; t < n_years_; ++t) out[t] = year(t);
  return out;
}

std::optional<std::size_t> PanelDataset::year_index(int y) const noexcept {
  if (y < first_year_ || y > last_year()) return std::nullopt;
  return static_cast<std::size_t>(y - first_year_);
}

std::optional<std::size_t> PanelDataset::variable_index(std::string_view code) const noexcept {
  for (std::size_t j = 0; j < specs_.size(); ++j) {
    if (specs_[j].code == code) return j;
  }
  return std::nullopt;
}

std::optional<std::size_t> PanelDataset::country_index(std::string_view country) const noexcept {
  for (std::size_t i = 0; i < countries_.size(); ++i) {
    if (countries_[i] == country) return i;
  }
  return std::nullopt;
}

Grid PanelDataset::target_levels() const {
  Grid out(n_countries(), n_years_);
  for (std::size_t i = 0; i < n_countries(); ++i) {
    for (std::size_t t = 0; t < n_years_; ++t) out(i, t) = values_(i, t, target_);
  }
  return out;
}

PanelDataset build_panel(std::span<const Observation> rows, const std::vector<VariableSpec>& specs,
                         const YearWindow& window) {
  if (specs.empty()) throw DataError("no variables declared");
  std::map<std::string, std::size_t> code_index;
  for (std::size_t j = 0; j < specs.size(); ++j) code_index.emplace(specs[j].code, j);

  // (country, code) -> year -> value
  std::map<std::pair<std::string, std::string>, std::map<int, double>> cells;
  std::set<std::string> country_set;
  std::vector<std::pair<int, int>> span(specs.size(), {INT32_MAX, INT32_MIN});
  for (const auto& row : rows) {
    const auto it = code_index.find(row.code);
    if (it == code_index.end()) throw UnknownVariable("undeclared variable code " + row.code);
    auto& series = cells[{row.country, row.code}];
    if (!series.emplace(row.year, row.value).second) throw DuplicateCell({row.country, row.year, row.code});
    country_set.insert(row.country);
    auto& [lo, hi] = span[it->second];
    lo = std::min(lo, row.year);
    hi = std::max(hi, row.year);
  }
  if (country_set.empty()) throw EmptyIntersection("no observations");

  int first = INT32_MIN;
  int last = INT32_MAX;
  for (std::size_t j = 0; j < specs.size(); ++j) {
    if (span[j].first > span[j].second) throw EmptyIntersection("no observations for variable " + specs[j].code);
    first = std::max(first, span[j].first);
    last = std::min(last, span[j].second);
  }
  if (window.first) first = std::max(first, *window.first);
  if (window.last) last = std::min(last, *window.last);
  if (first > last) throw EmptyIntersection("variables share no common year");

  const std::vector<std::string> countries(country_set.begin(), country_set.end());
  std::vector<CellRef> missing;
  for (const auto& country : countries) {
    for (int y = first; y <= last; ++y) {
      for (const auto& spec : specs) {
        const auto it = cells.find({country, spec.code});
        if (it == cells.end() || !it->second.contains(y)) missing.push_back({country, y, spec.code});
      }
    }
  }
  if (!missing.empty()) throw UnbalancedPanel(std::move(missing));

  const auto n_years = static_cast<std::size_t>(last - first + 1);
  Cube values(countries.size(), n_years, specs.size());
  for (std::size_t i = 0; i < countries.size(); ++i) {
    for (std::size_t j = 0; j < specs.size(); ++j) {
      const auto& series = cells.at({countries[i], specs[j].code});
      RawSeries raw{countries[i], specs[j].code, {}};
      raw.points.assign(series.lower_bound(first), series.upper_bound(last));
      const RawSeries transformed = apply_transform(raw, specs[j].transform);
      for (std::size_t t = 0; t < n_years; ++t) values(i, t, j) = transformed.points[t].second;
    }
  }
  return PanelDataset(countries, first, n_years, specs, std::move(values));
}

std::vector<Observation> to_rows(const PanelDataset& panel) {
  std::vector<Observation> rows;
  rows.reserve(panel.n_countries() * panel.n_years() * panel.n_vars());
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    for (std::size_t j = 0; j < panel.n_vars(); ++j) {
      for (std::size_t t = 0; t < panel.n_years(); ++t) {
        rows.push_back({panel.countries()[i], panel.year(t), panel.specs()[j].code, panel.value(i, t, j)});
      }
    }
  }
  return rows;
}

std::vector<VariableSpec> as_level_specs(std::vector<VariableSpec> specs) {
  for (auto& s : specs) s.transform = Transform::level;
  return specs;
}

GrowthSeries empirical_growth(const PanelDataset& panel) {
  const std::size_t n = panel.n_countries();
  const std::size_t intervals = panel.n_years() - 1;
  const std::size_t target = panel.target_index();
  GrowthSeries g{Grid(n, intervals), Grid(n, intervals)};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < intervals; ++t) {
      const TwoTerm d = exact_difference(panel.value(i, t + 1, target), panel.value(i, t, target));
      g.deltas(i, t) = d.hi;
      g.rounding(i, t) = d.lo;
    }
  }
  return g;
}

RankTable rank_table(const std::vector<CountrySeries>& series) {
  RankTable table;
  if (series.empty()) return table;

  std::vector<std::size_t> order(series.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return series[a].country < series[b].country; });

  std::vector<std::map<int, double>> by_year(series.size());
  for (std::size_t k = 0; k < series.size(); ++k) {
    for (const auto& [year, value] : series[k].points) {
      if (!by_year[k].emplace(year, value).second) {
        throw MismatchedYears("duplicate year " + std::to_string(year) + " for " + series[k].country);
      }
    }
  }
  for (std::size_t k = 1; k < series.size(); ++k) {
    const bool same = std::equal(by_year[k].begin(), by_year[k].end(), by_year[0].begin(), by_year[0].end(),
                                 [](const auto& a, const auto& b) { return a.first == b.first; });
    if (!same) throw MismatchedYears(series[k].country + " does not cover the same years as " + series[0].country);
  }

  for (std::size_t k : order) table.countries.push_back(series[k].country);
  for (const auto& entry : by_year[0]) table.years.push_back(entry.first);

  const std::size_t n = series.size();
  for (int year : table.years) {
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = by_year[order[i]].at(year);
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    // countries are already sorted, so a stable sort breaks ties by code
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    std::vector<int> ranks(n);
    for (std::size_t r = 0; r < n; ++r) ranks[idx[r]] = static_cast<int>(r + 1);
    table.ranks.push_back(std::move(ranks));
    table.values.push_back(std::move(values));
  }
  return table;
}

}  // namespace tvc
