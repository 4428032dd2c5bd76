#pragma once
// Long-format CSV ingestion, per-variable transforms and the dataset manifest.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tvc/panel.hpp"

namespace tvc {

struct RawSeries {
  std::string country;
  std::string code;
  /// (year, value); years unique, kept in ascending order by the parser.
  std::vector<std::pair<int, double>> points;

  friend bool operator==(const RawSeries&, const RawSeries&) = default;
};

/// Parses `country,year,variable,value` CSV (header required, LF or CRLF,
/// `.` decimal separator, blank lines ignored). Series come back sorted by
/// (country, code), points by year.
std::vector<RawSeries> parse_long_csv(std::string_view text);

/// Flattens series into observations (inverse of the grouping in parse_long_csv).
std::vector<Observation> to_observations(const std::vector<RawSeries>& series);

/// level: unchanged. cumulative: point k becomes the running sum of values
/// from the first point through k. Years must be consecutive.
RawSeries apply_transform(const RawSeries& series, Transform transform);

/// Emits observations as long-format CSV. Values use the shortest
/// round-trip representation so the file parses back bit-exactly.
std::string write_long_csv(const std::vector<Observation>& rows);

/// Dataset manifest:
///
///   # comment
///   target    = X1
///   base_year = 1995           (optional)
///   end_year  = 2024           (optional)
///   price     = X2             (optional; price-level variable for the scatter export)
///   variable  = X1 | level      | GDP per capita, volume index | index
///   variable  = X3 | cumulative | FDI net inflows              | % of GDP
///
/// `variable` lines define regressor order j = 1..d; label and unit are optional.
struct Manifest {
  std::vector<VariableSpec> variables;
  std::optional<int> base_year;
  std::optional<int> end_year;
  std::optional<std::string> price_code;

  std::string target_code() const;
};

Manifest parse_manifest(std::string_view text);
std::string write_manifest(const Manifest& manifest);

/// Reads all inputs, applies the manifest and assembles the panel.
/// `base_year` overrides the manifest's base year when set.
PanelDataset load_panel(const Manifest& manifest, const std::vector<std::filesystem::path>& inputs,
                        std::optional<int> base_year = std::nullopt);

}  // namespace tvc
