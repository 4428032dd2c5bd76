#include "tvc/ingest.hpp"

#include <algorithm>
#include <map>
#include <tuple>

#include "tvc/errors.hpp"
#include "tvc/text_io.hpp"

namespace tvc {
namespace {

constexpr std::string_view kHeader = "country,year,variable,value";

std::string_view strip_bom(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  return text;
}

template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    if (start == text.size() && line.empty()) break;
    fn(line_no, line);
    start = end + 1;
  }
}

}  // namespace

std::vector<RawSeries> parse_long_csv(std::string_view text) {
  text = strip_bom(text);
  std::map<std::pair<std::string, std::string>, std::map<int, double>> grouped;
  bool header_seen = false;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (trim(line).empty()) return;
    const auto fields = split(line, ',');
    if (!header_seen) {
      std::string normalized;
      for (std::size_t k = 0; k < fields.size(); ++k) {
        if (k) normalized += ',';
        normalized += trim(fields[k]);
      }
      if (normalized != kHeader) throw MalformedRow(line_no, "expected header '" + std::string(kHeader) + "'");
      header_seen = true;
      return;
    }
    if (fields.size() != 4) {
      throw MalformedRow(line_no, "expected 4 fields, found " + std::to_string(fields.size()));
    }
    const std::string country(trim(fields[0]));
    const std::string code(trim(fields[2]));
    if (country.empty()) throw MalformedRow(line_no, "empty country");
    if (code.empty()) throw MalformedRow(line_no, "empty variable");
    const auto year = parse_long(fields[1]);
    if (!year || *year < -100000 || *year > 100000) {
      throw MalformedRow(line_no, "invalid year '" + std::string(trim(fields[1])) + "'");
    }
    const auto value = parse_double(fields[3]);
    if (!value) throw MalformedRow(line_no, "invalid value '" + std::string(trim(fields[3])) + "'");
    const int y = static_cast<int>(*year);
    if (!grouped[{country, code}].emplace(y, *value).second) {
      throw DuplicateObservation(line_no, {country, y, code});
    }
  });
  if (!header_seen) throw MalformedRow(1, "missing header");

  std::vector<RawSeries> out;
  out.reserve(grouped.size());
  for (auto& [key, points] : grouped) {
    out.push_back({key.first, key.second, {points.begin(), points.end()}});
  }
  return out;
}

std::vector<Observation> to_observations(const std::vector<RawSeries>& series) {
  std::vector<Observation> rows;
  for (const auto& s : series) {
    for (const auto& [year, value] : s.points) rows.push_back({s.country, year, s.code, value});
  }
  return rows;
}

RawSeries apply_transform(const RawSeries& series, Transform transform) {
  for (std::size_t k = 1; k < series.points.size(); ++k) {
    if (series.points[k].first != series.points[k - 1].first + 1) {
      throw GapInSeries(series.country + "/" + series.code + ": years " +
                        std::to_string(series.points[k - 1].first) + " and " +
                        std::to_string(series.points[k].first) + " are not consecutive");
    }
  }
  RawSeries out = series;
  if (transform == Transform::cumulative) {
    double running = 0.0;
    for (auto& point : out.points) {
      running += point.second;
      point.second = running;
    }
  }
  return out;
}

std::string write_long_csv(const std::vector<Observation>& rows) {
  CsvBuilder csv({"country", "year", "variable", "value"});
  for (const auto& r : rows) csv.row({r.country, std::to_string(r.year), r.code, format_exact(r.value)});
  return csv.str();
}

std::string Manifest::target_code() const {
  for (const auto& v : variables) {
    if (v.target) return v.code;
  }
  return {};
}

Manifest parse_manifest(std::string_view text) {
  Manifest m;
  std::optional<std::pair<std::size_t, std::string>> target;

  auto parse_year = [](std::size_t line_no, std::string_view value) {
    const auto y = parse_long(value);
    if (!y) throw ManifestError(line_no, "invalid year '" + std::string(value) + "'");
    return static_cast<int>(*y);
  };

  for_each_line(strip_bom(text), [&](std::size_t line_no, std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) return;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ManifestError(line_no, "expected 'key = value'");
    const std::string_view key = trim(line.substr(0, eq));
    const std::string_view value = trim(line.substr(eq + 1));

    if (key == "variable") {
      const auto fields = split(value, '|');
      if (fields.size() < 2 || fields.size() > 4) {
        throw ManifestError(line_no, "variable needs 'code | transform [| label [| unit]]'");
      }
      VariableSpec spec;
      spec.code = std::string(trim(fields[0]));
      if (spec.code.empty()) throw ManifestError(line_no, "empty variable code");
      const auto t = parse_transform(trim(fields[1]));
      if (!t) throw ManifestError(line_no, "unknown transform '" + std::string(trim(fields[1])) + "'");
      spec.transform = *t;
      if (fields.size() > 2) spec.label = std::string(trim(fields[2]));
      if (fields.size() > 3) spec.unit = std::string(trim(fields[3]));
      for (const auto& existing : m.variables) {
        if (existing.code == spec.code) throw ManifestError(line_no, "duplicate variable " + spec.code);
      }
      m.variables.push_back(std::move(spec));
    } else if (key == "target") {
      target = {line_no, std::string(value)};
    } else if (key == "base_year") {
      m.base_year = parse_year(line_no, value);
    } else if (key == "end_year") {
      m.end_year = parse_year(line_no, value);
    } else if (key == "price") {
      m.price_code = std::string(value);
    } else {
      throw ManifestError(line_no, "unknown key '" + std::string(key) + "'");
    }
  });

  if (m.variables.empty()) throw ManifestError(0, "no variables declared");
  if (!target) throw ManifestError(0, "missing 'target'");
  auto it = std::find_if(m.variables.begin(), m.variables.end(),
                         [&](const VariableSpec& v) { return v.code == target->second; });
  if (it == m.variables.end()) throw ManifestError(target->first, "target " + target->second + " is not a declared variable");
  it->target = true;
  if (m.price_code && std::none_of(m.variables.begin(), m.variables.end(),
                                   [&](const VariableSpec& v) { return v.code == *m.price_code; })) {
    throw ManifestError(0, "price variable " + *m.price_code + " is not declared");
  }
  return m;
}

std::string write_manifest(const Manifest& manifest) {
  std::string out;
  out += "target = " + manifest.target_code() + "\n";
  if (manifest.base_year) out += "base_year = " + std::to_string(*manifest.base_year) + "\n";
  if (manifest.end_year) out += "end_year = " + std::to_string(*manifest.end_year) + "\n";
  if (manifest.price_code) out += "price = " + *manifest.price_code + "\n";
  for (const auto& v : manifest.variables) {
    out += "variable = " + v.code + " | " + std::string(transform_name(v.transform));
    if (!v.label.empty() || !v.unit.empty()) out += " | " + v.label;
    if (!v.unit.empty()) out += " | " + v.unit;
    out += "\n";
  }
  return out;
}

PanelDataset load_panel(const Manifest& manifest, const std::vector<std::filesystem::path>& inputs,
                        std::optional<int> base_year) {
  if (inputs.empty()) throw DataError("no input files");
  std::vector<Observation> rows;
  for (const auto& path : inputs) {
    std::vector<RawSeries> series;
    try {
      series = parse_long_csv(read_file(path));
    } catch (const DataError& e) {
      throw DataError(path.string() + ": " + e.what());
    }
    auto obs = to_observations(series);
    rows.insert(rows.end(), obs.begin(), obs.end());
  }
  const std::optional<int> base = base_year ? base_year : manifest.base_year;
  PanelDataset panel = build_panel(rows, manifest.variables, YearWindow{base, manifest.end_year});
  if (base && panel.first_year() != *base) {
    throw DataError("base year " + std::to_string(*base) + " is not covered by every variable (common window starts " +
                    std::to_string(panel.first_year()) + ")");
  }
  return panel;
}

}  // namespace tvc
