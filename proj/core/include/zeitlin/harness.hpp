#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "zeitlin/integrator.hpp"

namespace zeitlin {

// ---------------------------------------------------------------------------
// Scheme-difference convergence
// ---------------------------------------------------------------------------

struct DifferenceNorms {
  double sup_l2 = 0.0;  // sup_t ‖a(t) - b(t)‖ over the reference lattice
  double sup_h1 = 0.0;  // sup_t sqrt(Σ |Ω_k|² (1 + k²))
};

/// Both trajectories must have kept snapshots at identical record times.
/// Snapshots are embedded into `reference` before differencing.
DifferenceNorms sup_difference(const Trajectory& a, const Trajectory& b,
                               const ModeLattice& reference);

struct ConvergenceEntry {
  int n_modes = 0;
  double sup_diff = 0.0;
  double sup_diff_h1 = 0.0;
  bool valid = true;
  std::optional<double> diverged_at;
  double elapsed_seconds = 0.0;
};

struct ConvergenceReport {
  double sigma = 0.0;
  std::uint64_t seed = 0;
  std::vector<int> n_values;
  int n_reference = 0;
  double t_end = 0.0;
  double dt = 0.0;
  int support_radius = 0;
  std::vector<ConvergenceEntry> entries;  // parallel to n_values
  std::optional<double> fitted_decay_exponent;  // -slope of log sup_diff vs log N
  double theoretical_rate = 0.0;                // r / 2 with r = 8 (σ - 2) / (2σ + 3)
  double reference_elapsed_seconds = 0.0;
};

struct ConvergenceOptions {
  double dt = 1e-3;
  int record_every = 10;
  int support_radius = 2;
};

/// Runs Galerkin at n_reference as the proxy solution and the sine bracket at
/// each N from the same H^σ data (supported in max|k_i| <= support_radius),
/// and records sup_t ‖Ω(t)‖ on the reference lattice.
ConvergenceReport convergence_experiment(double sigma, std::uint64_t seed,
                                         std::vector<int> n_values, int n_reference,
                                         double t_end, const ConvergenceOptions& options = {});

/// r / 2 for r = 8 (σ - 2) / (2σ + 3).
double theoretical_decay_rate(double sigma);

// ---------------------------------------------------------------------------
// Stability comparison
// ---------------------------------------------------------------------------

struct StabilityReport {
  int n_modes = 0;
  double dt = 0.0;
  double t_end = 0.0;
  double tolerance = 0.0;
  std::optional<double> t_break_galerkin;
  std::optional<double> t_break_sine;
  // t_break_sine / t_break_galerkin, only when both schemes broke.
  std::optional<double> ratio;
  // Right-censored ratios when exactly one scheme stayed symmetric up to
  // t_end: sine unbroken gives ratio >= t_end / t_break_galerkin, Galerkin
  // unbroken gives ratio <= t_break_sine / t_end.
  std::optional<double> ratio_lower_bound;
  std::optional<double> ratio_upper_bound;
  bool inconclusive = false;
  std::optional<double> diverged_galerkin;
  std::optional<double> diverged_sine;
  double elapsed_galerkin = 0.0;
  double elapsed_sine = 0.0;
};

struct StabilityComparison {
  StabilityReport report;
  Trajectory galerkin;
  Trajectory sine;
};

/// Run both schemes from `base` (the scheme field is overridden) and compare
/// symmetry-breaking times at base.symmetry_tolerance.
StabilityComparison stability_comparison(const RunConfig& base);

StabilityReport stability_comparison(int n_modes, const InitialConditionSpec& initial, double dt,
                                      double t_end, double tol);

/// Largest value the data certify the ratio to be at least: the ratio itself,
/// or the censored lower bound. Empty otherwise.
std::optional<double> certified_stability_ratio(const StabilityReport& report);

// ---------------------------------------------------------------------------
// Structure constants and proof residuals
// ---------------------------------------------------------------------------

struct StructureConstantRow {
  Wavevector n;
  Wavevector m;
  int n_modes = 0;
  double su = 0.0;
  double sdiff = 0.0;
  double gap = 0.0;  // |sdiff - su|
};

struct StructureConstantOrder {
  Wavevector n;
  Wavevector m;
  std::optional<double> empirical_order;  // -slope of log gap vs log N; empty for parallel pairs
};

struct StructureConstantReport {
  std::vector<StructureConstantRow> rows;
  std::vector<StructureConstantOrder> orders;
};

StructureConstantReport structure_constant_report(
    const std::vector<std::pair<Wavevector, Wavevector>>& pairs, const std::vector<int>& n_values);

struct ResidualRow {
  int n_modes = 0;
  double epsilon = 0.0;
  double residual_sum = 0.0;
};

struct ResidualReport {
  double sigma = 0.0;
  std::uint64_t seed = 0;
  int field_modes = 0;
  std::vector<ResidualRow> rows;
};

/// residual_sum(ω, 2π/N) for each N with one fixed H^σ field generated on the
/// field_modes lattice (default: the smallest N).
ResidualReport residual_report(double sigma, std::uint64_t seed, const std::vector<int>& n_values,
                               int field_modes = 0);
ResidualReport residual_report(const ModeField& field, const std::vector<int>& n_values);

/// Least-squares slope of log y against log x over pairs with x, y > 0.
std::optional<double> log_log_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace zeitlin
