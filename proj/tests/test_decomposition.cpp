#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "support/oracles.hpp"
#include "support/panels.hpp"
#include "support/table_checks.hpp"
#include "tvc/decomposition.hpp"
#include "tvc/errors.hpp"
#include "tvc/reconstruction.hpp"
#include "tvc/synth.hpp"

namespace tvc {
namespace {

CoefficientPath path_of(std::vector<double> alpha, std::vector<std::vector<double>> beta, int first_year = 2000) {
  CoefficientPath p;
  p.first_year = first_year;
  for (std::size_t j = 0; j < beta.at(0).size(); ++j) p.codes.push_back("X" + std::to_string(j + 1));
  p.alpha = std::move(alpha);
  p.beta = std::move(beta);
  return p;
}

double ulp_distance(double a, double b) {
  if (a == b) return 0.0;
  return std::fabs(a - b) / std::numeric_limits<double>::epsilon() / std::max(std::fabs(a), std::fabs(b));
}

TEST(ComponentDeltas, NullModelKeepsBaseShares) {
  const auto panel = testing::make_panel({{{40, 1}, {41, 2}, {43, 3}}, {{60, 5}, {62, 3}, {61, 1}}, {{80, 2}, {85, 2}, {90, 4}}});
  const auto path = path_of({0, 0}, {{0, 0}, {0, 0}});
  const auto dec = decompose(path, panel);
  for (double v : dec.component_deltas.data()) EXPECT_EQ(v, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t t = 0; t < 3; ++t) {
      for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(dec.kappa(i, t, j), panel.value(i, 0, 0) / 2);
    }
  }
}

TEST(ComponentDeltas, InterceptSplitsEqually) {
  std::vector<std::vector<std::vector<double>>> values(8, std::vector<std::vector<double>>(2, std::vector<double>(7)));
  testing::TestRng rng(3);
  for (auto& c : values) {
    for (auto& y : c) {
      for (auto& v : y) v = rng.uniform(1, 100);
    }
  }
  const auto panel = testing::make_panel(values);
  const auto deltas = component_deltas(path_of({0.7}, {std::vector<double>(7, 0.0)}), panel);
  for (double v : deltas.data()) EXPECT_NEAR(v, 0.1, 1e-15);
}

TEST(ComponentDeltas, HandComputedExample) {
  const auto panel = testing::make_panel({{{3, 4}, {5, 5}}, {{1, 1}, {2, 2}}, {{2, 7}, {3, 3}}});
  const auto deltas = component_deltas(path_of({1}, {{2, -1}}), panel);
  EXPECT_EQ(deltas(0, 0, 0), 6.5);
  EXPECT_EQ(deltas(0, 0, 1), -3.5);
}

TEST(ComponentDeltas, DimensionMismatch) {
  const auto panel = testing::make_panel({{{3, 4}, {5, 5}}, {{1, 1}, {2, 2}}, {{2, 7}, {3, 3}}});
  EXPECT_THROW(component_deltas(path_of({1, 1}, {{2, -1}, {1, 1}}), panel), DimensionMismatch);
  EXPECT_THROW(component_deltas(path_of({1}, {{2}}), panel), DimensionMismatch);
}

TEST(ComponentPaths, CumulatesFromBaseShare) {
  Cube deltas(1, 2, 1);
  deltas(0, 0, 0) = 5;
  deltas(0, 1, 0) = -2;
  const std::vector<double> base{70};
  const Cube kappa = component_paths(deltas, base);
  EXPECT_EQ(kappa(0, 0, 0), 70);
  EXPECT_EQ(kappa(0, 1, 0), 75);
  EXPECT_EQ(kappa(0, 2, 0), 73);
  EXPECT_EQ(regressed_level(kappa, base, 0, 0), 70);
  EXPECT_EQ(regressed_level(kappa, base, 0, 2), 73);
}

class FittedSynth : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FittedSynth, ComponentSumIdentities) {
  SynthSpec spec;
  spec.seed = GetParam();
  spec.noise_scale = 0.5;
  const auto synth = generate(spec);
  const auto fit = fit_path(synth.panel, empirical_growth(synth.panel));
  const auto dec = decompose(fit.path, synth.panel);
  const Grid dyr = regressed_growth(dec.component_deltas);
  const std::size_t final_t = synth.panel.n_years() - 1;
  for (std::size_t i = 0; i < synth.panel.n_countries(); ++i) {
    for (std::size_t t = 0; t < final_t; ++t) {
      double s = 0.0;
      for (std::size_t j = 0; j < spec.n_vars; ++j) s += dec.component_deltas(i, t, j);
      EXPECT_LE(ulp_distance(s, dyr(i, t)), 8.0);
      // fitted growth from the coefficients directly agrees up to rounding
      double direct = fit.path.alpha[t];
      for (std::size_t j = 0; j < spec.n_vars; ++j) direct += fit.path.beta[t][j] * synth.panel.value(i, t, j);
      EXPECT_NEAR(direct, dyr(i, t), 1e-9 * (1 + std::fabs(direct)));
    }
    double kappa_sum = 0.0;
    for (std::size_t j = 0; j < spec.n_vars; ++j) kappa_sum += dec.kappa(i, final_t, j);
    const auto rec = reconstruct_static(synth.panel, empirical_growth(synth.panel), fit.path);
    EXPECT_EQ(kappa_sum, rec.gdp_regr(i, final_t));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, FittedSynth, ::testing::Values(1u, 42u, 977u));

TEST(RelativeContribution, Example) {
  const std::vector<double> kappa{3, 4};
  EXPECT_NEAR(*relative_contribution(kappa, 1), 0.64, 1e-15);
  EXPECT_NEAR(*relative_contribution(kappa, 0), 0.36, 1e-15);
  const std::vector<double> neg{-3, 4};
  EXPECT_NEAR(*relative_contribution(neg, 0), -0.36, 1e-15);
}

TEST(RelativeContribution, RandomizedBounds) {
  testing::TestRng rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    std::vector<double> k(1 + rng.index(10));
    const double mag = std::pow(10.0, rng.uniform(-100, 100));
    for (auto& v : k) v = rng.uniform(-1, 1) * mag;
    const auto g = relative_contribution(k, rng.index(k.size()));
    ASSERT_TRUE(g);
    EXPECT_LE(std::fabs(*g), 1.0);
  }
}

TEST(RelativeContribution, SoleNonzeroComponentIsExactlyOne) {
  testing::TestRng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> k(1 + rng.index(8), 0.0);
    const std::size_t j = rng.index(k.size());
    k[j] = std::pow(10.0, rng.uniform(-150, 150));
    EXPECT_EQ(*relative_contribution(k, j), 1.0);
    k[j] = -k[j];
    EXPECT_EQ(*relative_contribution(k, j), -1.0);
  }
}

TEST(RelativeContribution, PositiveScalingInvariance) {
  testing::TestRng rng(31);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<double> k(2 + rng.index(7));
    for (auto& v : k) v = rng.uniform(-200, 200);
    const std::size_t j = rng.index(k.size());
    const double c = std::pow(10.0, rng.uniform(-6, 6));
    std::vector<double> scaled = k;
    for (auto& v : scaled) v *= c;
    EXPECT_NEAR(*relative_contribution(scaled, j), *relative_contribution(k, j), 1e-12);
  }
}

TEST(RelativeContribution, AllZeroIsAGap) {
  const std::vector<double> zero{0, 0, 0};
  EXPECT_FALSE(relative_contribution(zero, 1).has_value());
  EXPECT_THROW(relative_contribution(zero, 3), DimensionMismatch);

  Cube kappa(1, 2, 2);
  kappa(0, 1, 0) = 1;
  const auto g = relative_contribution(kappa, 0);
  EXPECT_FALSE(g[0][0].has_value());
  EXPECT_EQ(*g[0][1], 1.0);
}

TEST(ContributionTable, OrderedByMeanWithTotal) {
  const auto panel = testing::make_panel({{{10, 1, 5}, {12, 2, 6}}, {{20, 3, 1}, {21, 2, 2}}, {{30, 1, 1}, {30, 5, 5}}, {{40, 2, 2}, {44, 1, 3}}});
  const auto path = path_of({0.3}, {{0.1, -4, 2}});
  const auto dec = decompose(path, panel);
  const Grid err(4, 2, 0.25);
  const auto table = contribution_table(panel, dec, err, 2001);
  EXPECT_EQ(table.year, 2001);
  ASSERT_EQ(table.columns.size(), 4u);
  std::vector<double> means(4, 0.0);
  for (std::size_t c = 0; c < 4; ++c) {
    for (const auto& row : table.values) means[c] += row[c] / 4;
  }
  EXPECT_TRUE(std::is_sorted(means.begin(), means.end(), std::greater<>()));
  EXPECT_EQ(table.columns[0], "Total");
  EXPECT_EQ(table.columns.back(), "X2");
  EXPECT_TRUE(testing::row_identity_violations(table, 1e-9).empty());
  EXPECT_EQ(table.error_acc, std::vector<double>(4, 0.25));
  EXPECT_THROW(contribution_table(panel, dec, err, 1999), DataError);
}

TEST(ContributionTable, ExactTiesKeepVariableOrder) {
  const auto panel = testing::make_panel({{{1, 1}, {1, 1}}, {{1, 2}, {1, 1}}, {{1, 3}, {1, 1}}});
  const auto dec = decompose(path_of({0}, {{0, 0}}), panel);
  const auto table = contribution_table(panel, dec, Grid(3, 2), 2000);
  EXPECT_EQ(table.columns, (std::vector<std::string>{"Total", "X1", "X2"}));
}

TEST(ReferenceTable, RowIdentityHoldsExceptEstonia) {
  const auto table = testing::reference_cee_table();
  // Estonia's first five cells duplicate Croatia's; its components sum to 71.72.
  EXPECT_EQ(testing::row_identity_violations(table, 0.02), std::vector<std::string>{"EE"});
}

TEST(ReferenceTable, QualitativeSignsAndBalticOrder) {
  const auto table = testing::reference_cee_table();
  EXPECT_TRUE(testing::column_all(table, "X7", false));
  EXPECT_TRUE(testing::column_all(table, "X2", true));
  EXPECT_TRUE(testing::descending(table, "X7", {"LT", "LV", "EE"}));
  EXPECT_FALSE(testing::descending(table, "X7", {"EE", "LV", "LT"}));
  EXPECT_FALSE(testing::column_all(table, "X6", true));
}

}  // namespace
}  // namespace tvc
