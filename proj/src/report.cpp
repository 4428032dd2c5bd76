#include "tvc/report.hpp"

#include <cmath>
#include <map>

#include <json.hpp>

#include "tvc/errors.hpp"
#include "tvc/text_io.hpp"

namespace tvc {
namespace {

// JSON numbers carry the same 6 significant digits as the CSV export.
nlohmann::json sig6_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return *parse_double(format_sig6(v));
}

}  // namespace

Analysis analyze(PanelDataset panel, const FitOptions& options) {
  GrowthSeries growth = empirical_growth(panel);
  PathFit fit = fit_path(panel, growth, options);
  DecompositionResult dec = decompose(fit.path, panel);
  ReconstructionSet rec = reconstruct(panel, growth, fit.path);
  return {std::move(panel), std::move(growth), std::move(fit), std::move(dec), std::move(rec)};
}

std::string component_deltas_csv(const PanelDataset& panel, const DecompositionResult& dec) {
  CsvBuilder csv({"country", "interval_start", "interval_end", "component", "delta"});
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    for (std::size_t t = 0; t + 1 < panel.n_years(); ++t) {
      for (std::size_t j = 0; j < panel.n_vars(); ++j) {
        csv.row({panel.countries()[i], std::to_string(panel.year(t)), std::to_string(panel.year(t + 1)),
                 panel.specs()[j].code, format_sig6(dec.component_deltas(i, t, j))});
      }
    }
  }
  return csv.str();
}

std::string kappa_csv(const PanelDataset& panel, const DecompositionResult& dec) {
  CsvBuilder csv({"country", "year", "component", "kappa"});
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    for (std::size_t t = 0; t < panel.n_years(); ++t) {
      for (std::size_t j = 0; j < panel.n_vars(); ++j) {
        csv.row({panel.countries()[i], std::to_string(panel.year(t)), panel.specs()[j].code,
                 format_sig6(dec.kappa(i, t, j))});
      }
    }
  }
  return csv.str();
}

std::string gamma_csv(const PanelDataset& panel, const std::vector<std::vector<std::optional<double>>>& gamma) {
  CsvBuilder csv({"country", "year", "gamma"});
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    for (std::size_t t = 0; t < panel.n_years(); ++t) {
      const auto& g = gamma.at(i).at(t);
      csv.row({panel.countries()[i], std::to_string(panel.year(t)), g ? format_sig6(*g) : std::string()});
    }
  }
  return csv.str();
}

std::string reconstruction_csv(const PanelDataset& panel, const ReconstructionSet& rec) {
  CsvBuilder csv({"country", "year", "gdp_data", "gdp_regr", "gdp_regr_full", "error_acc"});
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    for (std::size_t t = 0; t < panel.n_years(); ++t) {
      csv.row({panel.countries()[i], std::to_string(panel.year(t)), format_sig6(rec.gdp_data(i, t)),
               format_sig6(rec.gdp_regr(i, t)), format_sig6(rec.gdp_regr_full(i, t)), format_sig6(rec.error_acc(i, t))});
    }
  }
  return csv.str();
}

std::string table_csv(const ContributionTable& table) {
  std::vector<std::string> header{"country"};
  header.insert(header.end(), table.columns.begin(), table.columns.end());
  header.push_back("error_acc");
  CsvBuilder csv(header);
  for (std::size_t r = 0; r < table.countries.size(); ++r) {
    std::vector<std::string> row{table.countries[r]};
    for (double v : table.values[r]) row.push_back(format_sig6(v));
    row.push_back(format_sig6(table.error_acc[r]));
    csv.row(row);
  }
  return csv.str();
}

std::string table_json(const ContributionTable& table) {
  nlohmann::ordered_json doc;
  doc["year"] = table.year;
  doc["columns"] = table.columns;
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t r = 0; r < table.countries.size(); ++r) {
    nlohmann::ordered_json row;
    row["country"] = table.countries[r];
    nlohmann::ordered_json values;
    for (std::size_t c = 0; c < table.columns.size(); ++c) values[table.columns[c]] = sig6_number(table.values[r][c]);
    row["values"] = std::move(values);
    row["error_acc"] = sig6_number(table.error_acc[r]);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  return doc.dump(2) + "\n";
}

std::string ranks_csv(const RankTable& ranks) {
  CsvBuilder csv({"year", "country", "value", "rank"});
  for (std::size_t y = 0; y < ranks.years.size(); ++y) {
    for (std::size_t i = 0; i < ranks.countries.size(); ++i) {
      csv.row({std::to_string(ranks.years[y]), ranks.countries[i], format_sig6(ranks.values[y][i]),
               std::to_string(ranks.ranks[y][i])});
    }
  }
  return csv.str();
}

std::vector<CountrySeries> target_series(const PanelDataset& panel, const std::vector<Observation>& projection) {
  const std::size_t target = panel.target_index();
  const std::string& code = panel.specs()[target].code;
  std::vector<CountrySeries> out;
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    CountrySeries s{panel.countries()[i], {}};
    for (std::size_t t = 0; t < panel.n_years(); ++t) s.points.emplace_back(panel.year(t), panel.value(i, t, target));
    out.push_back(std::move(s));
  }
  for (const auto& obs : projection) {
    if (obs.code != code) continue;
    const auto i = panel.country_index(obs.country);
    if (!i) throw DataError("projection for unknown country " + obs.country);
    if (obs.year <= panel.last_year()) {
      throw DataError("projection year " + std::to_string(obs.year) + " for " + obs.country + " overlaps the panel");
    }
    out[*i].points.emplace_back(obs.year, obs.value);
  }
  return out;
}

PennScatter penn_scatter(const PanelDataset& panel, std::size_t price_index, int year) {
  const auto t = panel.year_index(year);
  if (!t) throw DataError("scatter year " + std::to_string(year) + " is outside the panel");
  if (price_index >= panel.n_vars()) throw DimensionMismatch("price variable index out of range");
  PennScatter s;
  s.year = year;
  s.countries = panel.countries();
  Matrix x(panel.n_countries(), 1);
  for (std::size_t i = 0; i < panel.n_countries(); ++i) {
    s.level.push_back(panel.value(i, *t, panel.target_index()));
    s.price.push_back(panel.value(i, *t, price_index));
    x(i, 0) = s.level.back();
  }
  const IntervalFit fit = fit_interval(x, s.price);
  s.alpha = fit.alpha;
  s.beta = fit.beta[0];
  s.r_squared = fit.r_squared;
  return s;
}

std::string penn_points_csv(const std::vector<PennScatter>& scatters) {
  CsvBuilder csv({"year", "country", "gdp", "price", "trend"});
  for (const auto& s : scatters) {
    for (std::size_t i = 0; i < s.countries.size(); ++i) {
      csv.row({std::to_string(s.year), s.countries[i], format_sig6(s.level[i]), format_sig6(s.price[i]),
               format_sig6(s.alpha + s.beta * s.level[i])});
    }
  }
  return csv.str();
}

std::string penn_trend_csv(const std::vector<PennScatter>& scatters) {
  CsvBuilder csv({"year", "alpha", "beta", "r_squared"});
  for (const auto& s : scatters) {
    csv.row({std::to_string(s.year), format_sig6(s.alpha), format_sig6(s.beta), format_sig6(s.r_squared)});
  }
  return csv.str();
}

}  // namespace tvc
