#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "support/oracles.hpp"
#include "zeitlin/harness.hpp"

namespace zeitlin {
namespace {

TEST(SupDifference, SelfComparisonIsZero) {
  RunConfig c;
  c.n_modes = 7;
  c.t_end = 0.1;
  c.dt = 0.01;
  c.record_every = 2;
  c.keep_snapshots = true;
  c.initial_condition.kind = InitialConditionSpec::Kind::Smooth;
  const Trajectory a = integrate(c);
  const DifferenceNorms d = sup_difference(a, a, ModeLattice(11));
  EXPECT_EQ(d.sup_l2, 0.0);
  EXPECT_EQ(d.sup_h1, 0.0);

  Trajectory no_snapshots = a;
  no_snapshots.snapshots.clear();
  EXPECT_THROW(sup_difference(a, no_snapshots, ModeLattice(11)), std::invalid_argument);
}

TEST(TheoreticalRate, Formula) {
  EXPECT_DOUBLE_EQ(theoretical_decay_rate(3.0), 0.5 * 8.0 / 9.0);
  EXPECT_DOUBLE_EQ(theoretical_decay_rate(2.0), 0.0);
}

TEST(LogLogSlope, RecoversPowerLaw) {
  const std::vector<double> x{2, 4, 8, 16};
  std::vector<double> y;
  for (double v : x) y.push_back(3.0 * std::pow(v, -1.5));
  EXPECT_NEAR(*log_log_slope(x, y), -1.5, 1e-12);
  EXPECT_FALSE(log_log_slope({1.0}, {1.0}));
  EXPECT_FALSE(log_log_slope({2.0, 2.0}, {1.0, 3.0}));
}

TEST(ConvergenceExperiment, SmallRunDecreasesAndStartsMatched) {
  ConvergenceOptions opt;
  opt.dt = 0.01;
  opt.record_every = 5;
  opt.support_radius = 1;
  const ConvergenceReport r = convergence_experiment(3.0, 4, {5, 9, 13}, 21, 0.3, opt);
  ASSERT_EQ(r.entries.size(), 3u);
  for (const auto& e : r.entries) EXPECT_TRUE(e.valid);
  EXPECT_GT(r.entries[0].sup_diff, r.entries[1].sup_diff);
  EXPECT_GT(r.entries[1].sup_diff, r.entries[2].sup_diff);
  EXPECT_GE(r.entries[0].sup_diff_h1, r.entries[0].sup_diff);
  ASSERT_TRUE(r.fitted_decay_exponent);
  EXPECT_GT(*r.fitted_decay_exponent, 0.0);
  EXPECT_DOUBLE_EQ(r.theoretical_rate, theoretical_decay_rate(3.0));
}

TEST(ConvergenceExperiment, Deterministic) {
  ConvergenceOptions opt;
  opt.dt = 0.01;
  opt.support_radius = 1;
  const ConvergenceReport a = convergence_experiment(3.0, 9, {5, 7}, 11, 0.1, opt);
  const ConvergenceReport b = convergence_experiment(3.0, 9, {5, 7}, 11, 0.1, opt);
  for (std::size_t i = 0; i < a.entries.size(); ++i)
    EXPECT_EQ(a.entries[i].sup_diff, b.entries[i].sup_diff);
}

TEST(ConvergenceExperiment, RejectsBadInputs) {
  EXPECT_THROW(convergence_experiment(3.0, 0, {}, 11, 0.1), std::invalid_argument);
  EXPECT_THROW(convergence_experiment(3.0, 0, {9, 7}, 11, 0.1), std::invalid_argument);
  EXPECT_THROW(convergence_experiment(3.0, 0, {6, 9}, 11, 0.1), std::invalid_argument);
  EXPECT_THROW(convergence_experiment(3.0, 0, {7, 9}, 9, 0.1), std::invalid_argument);
  ConvergenceOptions wide;
  wide.support_radius = 3;
  EXPECT_THROW(convergence_experiment(3.0, 0, {5, 9}, 11, 0.1, wide), std::invalid_argument);
  EXPECT_THROW(convergence_experiment(2.0, 0, {5, 9}, 11, 0.1), std::invalid_argument);
}

TEST(StabilityComparison, InfiniteToleranceIsInconclusive) {
  InitialConditionSpec spec;
  spec.kind = InitialConditionSpec::Kind::Smooth;
  const StabilityReport r =
      stability_comparison(7, spec, 0.01, 0.2, std::numeric_limits<double>::infinity());
  EXPECT_TRUE(r.inconclusive);
  EXPECT_FALSE(r.t_break_galerkin);
  EXPECT_FALSE(r.t_break_sine);
  EXPECT_FALSE(r.ratio);
  EXPECT_FALSE(certified_stability_ratio(r));
}

TEST(StabilityComparison, CensoredSineGivesLowerBound) {
  // Delta data at x0 = 0 is an exact sine-bracket equilibrium, so only the
  // Galerkin run can break.
  InitialConditionSpec spec;
  spec.kind = InitialConditionSpec::Kind::Delta;
  const StabilityReport r = stability_comparison(9, spec, 0.01, 40.0, 1e-6);
  ASSERT_TRUE(r.t_break_galerkin);
  EXPECT_FALSE(r.t_break_sine);
  EXPECT_FALSE(r.ratio);
  ASSERT_TRUE(r.ratio_lower_bound);
  EXPECT_DOUBLE_EQ(*r.ratio_lower_bound, 40.0 / *r.t_break_galerkin);
  EXPECT_FALSE(r.inconclusive);
  EXPECT_EQ(certified_stability_ratio(r), r.ratio_lower_bound);
}

TEST(StructureConstantReport, Examples) {
  const StructureConstantReport r =
      structure_constant_report({{{1, 0}, {0, 1}}, {{1, 2}, {2, 4}}}, {5, 15, 45, 135});
  ASSERT_EQ(r.rows.size(), 8u);
  EXPECT_NEAR(r.rows[0].gap, 0.243173, 1e-6);
  EXPECT_EQ(r.rows[0].sdiff, 1.0);
  for (int i = 4; i < 8; ++i) EXPECT_EQ(r.rows[i].gap, 0.0);
  ASSERT_EQ(r.orders.size(), 2u);
  ASSERT_TRUE(r.orders[0].empirical_order);
  EXPECT_NEAR(*r.orders[0].empirical_order, 2.0, 0.2);
  EXPECT_FALSE(r.orders[1].empirical_order);
  EXPECT_THROW(structure_constant_report({{{0, 0}, {1, 0}}}, {5}), std::invalid_argument);
}

ModeField unit_envelope(int n, double sigma) {
  const ModeLattice lat(n);
  ModeField w(lat);
  lat.for_each([&](Wavevector k) {
    if (!k.is_zero()) w[k] = std::pow(1.0 + k.norm2(), -sigma / 2);
  });
  return w;
}

TEST(ResidualReport, ZeroFieldAndSmoothnessOrdering) {
  const ResidualReport zero = residual_report(ModeField(ModeLattice(9)), {9, 15});
  for (const auto& row : zero.rows) EXPECT_EQ(row.residual_sum, 0.0);

  const double rough = residual_report(unit_envelope(15, 2.5), {15}).rows[0].residual_sum;
  const double smooth = residual_report(unit_envelope(15, 4.0), {15}).rows[0].residual_sum;
  EXPECT_LT(smooth, rough);
}

TEST(ResidualReport, DecreasingForSmoothField) {
  const ResidualReport r = residual_report(3.0, 0, {15, 19, 23, 27, 31});
  EXPECT_EQ(r.field_modes, 15);
  for (std::size_t i = 1; i < r.rows.size(); ++i)
    EXPECT_LT(r.rows[i].residual_sum, r.rows[i - 1].residual_sum);
  EXPECT_DOUBLE_EQ(r.rows[0].epsilon, 2 * std::numbers::pi / 15);
}

}  // namespace
}  // namespace zeitlin
