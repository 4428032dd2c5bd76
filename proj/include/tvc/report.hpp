#pragma once
// End-to-end analysis and the CSV/JSON exports consumed by external plotters.

#include <optional>
#include <string>
#include <vector>

#include "tvc/decomposition.hpp"
#include "tvc/estimator.hpp"
#include "tvc/panel.hpp"
#include "tvc/reconstruction.hpp"

namespace tvc {

struct Analysis {
  PanelDataset panel;
  GrowthSeries growth;
  PathFit fit;
  DecompositionResult decomposition;
  ReconstructionSet reconstruction;
};

/// growth -> fit -> decomposition -> reconstruction.
Analysis analyze(PanelDataset panel, const FitOptions& options = {});

/// `country,interval_start,interval_end,component,delta`
std::string component_deltas_csv(const PanelDataset& panel, const DecompositionResult& dec);
/// `country,year,component,kappa`
std::string kappa_csv(const PanelDataset& panel, const DecompositionResult& dec);
/// `country,year,gamma`; gaps (all components zero) are left empty.
std::string gamma_csv(const PanelDataset& panel, const std::vector<std::vector<std::optional<double>>>& gamma);
/// `country,year,gdp_data,gdp_regr,gdp_regr_full,error_acc`
std::string reconstruction_csv(const PanelDataset& panel, const ReconstructionSet& rec);
/// `country,<columns in table order>,error_acc`
std::string table_csv(const ContributionTable& table);
/// Same content as table_csv, as a JSON document.
std::string table_json(const ContributionTable& table);
/// `year,country,value,rank`
std::string ranks_csv(const RankTable& ranks);

/// Target-level series per country; `projection` rows (same target code,
/// years after the panel) extend the horizon when supplied.
std::vector<CountrySeries> target_series(const PanelDataset& panel, const std::vector<Observation>& projection = {});

/// Cross-sectional price-level vs target-level scatter with a least-squares
/// trend line for one year.
struct PennScatter {
  int year = 0;
  std::vector<std::string> countries;
  std::vector<double> level;
  std::vector<double> price;
  double alpha = 0.0;
  double beta = 0.0;
  double r_squared = 0.0;
};

PennScatter penn_scatter(const PanelDataset& panel, std::size_t price_index, int year);
/// `year,country,gdp,price,trend`
std::string penn_points_csv(const std::vector<PennScatter>& scatters);
/// `year,alpha,beta,r_squared`
std::string penn_trend_csv(const std::vector<PennScatter>& scatters);

}  // namespace tvc
