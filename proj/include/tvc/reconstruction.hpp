#pragma once
// GDP reconstructions from the fitted coefficient path.
//
//   gdp_data      base + cumulated empirical growth (reproduces the data exactly)
//   gdp_regr      base + cumulated regressed growth, empirical regressors
//   gdp_regr_full forward simulation; the lagged target level fed back from
//                 the simulation itself, every other regressor empirical
//   error_acc     gdp_regr - gdp_data (the accumulated regression residual)
//
// Base values are per country: the target level in the first panel year.

#include "tvc/containers.hpp"
#include "tvc/decomposition.hpp"
#include "tvc/estimator.hpp"
#include "tvc/panel.hpp"

namespace tvc {

struct StaticReconstruction {
  Grid gdp_data;
  Grid gdp_regr;
  Grid error_acc;
};

struct ReconstructionSet {
  Grid gdp_data;
  Grid gdp_regr;
  Grid gdp_regr_full;
  Grid error_acc;
};

StaticReconstruction reconstruct_static(const PanelDataset& panel, const GrowthSeries& growth, const CoefficientPath& path);

Grid reconstruct_dynamic(const PanelDataset& panel, const CoefficientPath& path);

ReconstructionSet reconstruct(const PanelDataset& panel, const GrowthSeries& growth, const CoefficientPath& path);

}  // namespace tvc
