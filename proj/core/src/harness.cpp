#include "zeitlin/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "zeitlin/parallel.hpp"

namespace zeitlin {

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Trajectory run_from(const RunConfig& config, const ModeField& initial, SchemeKind scheme,
                    bool record_casimirs) {
  return integrate(
      config, initial, [scheme](const ModeField& f) { return scheme_rhs(scheme, f); },
      record_casimirs);
}

}  // namespace

DifferenceNorms sup_difference(const Trajectory& a, const Trajectory& b,
                               const ModeLattice& reference) {
  if (a.snapshots.size() != b.snapshots.size() || a.snapshots.size() != a.records.size() ||
      b.snapshots.size() != b.records.size())
    throw std::invalid_argument("sup_difference needs snapshots at matching record times");
  DifferenceNorms out;
  for (std::size_t i = 0; i < a.snapshots.size(); ++i) {
    if (a.records[i].t != b.records[i].t)
      throw std::invalid_argument("sup_difference: record times differ");
    const ModeField diff = embed(a.snapshots[i], reference) - embed(b.snapshots[i], reference);
    out.sup_l2 = std::max(out.sup_l2, l2_norm(diff));
    out.sup_h1 = std::max(out.sup_h1, std::sqrt(sobolev_norm2(diff, 1.0)));
  }
  return out;
}

double theoretical_decay_rate(double sigma) {
  const double r = 8.0 * (sigma - 2.0) / (2.0 * sigma + 3.0);
  return 0.5 * r;
}

std::optional<double> log_log_slope(const std::vector<double>& x, const std::vector<double>& y) {
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (std::size_t i = 0; i < std::min(x.size(), y.size()); ++i) {
    if (!(x[i] > 0.0) || !(y[i] > 0.0)) continue;
    const double lx = std::log(x[i]);
    const double ly = std::log(y[i]);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++count;
  }
  if (count < 2) return std::nullopt;
  const double denom = count * sxx - sx * sx;
  if (denom == 0.0) return std::nullopt;
  return (count * sxy - sx * sy) / denom;
}

ConvergenceReport convergence_experiment(double sigma, std::uint64_t seed,
                                         std::vector<int> n_values, int n_reference,
                                         double t_end, const ConvergenceOptions& options) {
  if (n_values.empty()) throw std::invalid_argument("convergence_experiment needs N values");
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    if (n_values[i] < 3 || n_values[i] % 2 == 0)
      throw std::invalid_argument("convergence N values must be odd and >= 3");
    if (i > 0 && n_values[i] <= n_values[i - 1])
      throw std::invalid_argument("convergence N values must be strictly increasing");
  }
  if (n_reference <= n_values.back())
    throw std::invalid_argument("reference N must exceed every test N");
  if (options.support_radius < 0 || options.support_radius > (n_values.front() - 1) / 2)
    throw std::invalid_argument("initial support must fit inside the smallest N box");

  ConvergenceReport report;
  report.sigma = sigma;
  report.seed = seed;
  report.n_values = n_values;
  report.n_reference = n_reference;
  report.t_end = t_end;
  report.dt = options.dt;
  report.support_radius = options.support_radius;
  report.theoretical_rate = theoretical_decay_rate(sigma);

  const ModeLattice reference(n_reference);
  const ModeField initial =
      smooth_initial_condition(reference, sigma, seed, options.support_radius);

  RunConfig base;
  base.dt = options.dt;
  base.t_end = t_end;
  base.record_every = options.record_every;
  base.keep_snapshots = true;
  base.initial_condition.kind = InitialConditionSpec::Kind::Smooth;
  base.initial_condition.sigma = sigma;
  base.initial_condition.seed = seed;
  base.initial_condition.support_radius = options.support_radius;

  // Task 0 is the Galerkin reference, task i > 0 the sine run at n_values[i-1].
  std::vector<Trajectory> runs(n_values.size() + 1);
  std::vector<double> elapsed(runs.size());
  parallel_for(runs.size(), [&](std::size_t task) {
    const auto start = std::chrono::steady_clock::now();
    RunConfig config = base;
    if (task == 0) {
      config.scheme = SchemeKind::Galerkin;
      config.n_modes = n_reference;
      runs[task] = run_from(config, initial, SchemeKind::Galerkin, false);
    } else {
      config.scheme = SchemeKind::SineBracket;
      config.n_modes = n_values[task - 1];
      const ModeField start_field = truncate(initial, ModeLattice(config.n_modes));
      runs[task] = run_from(config, start_field, SchemeKind::SineBracket, false);
    }
    elapsed[task] = seconds_since(start);
  });

  report.reference_elapsed_seconds = elapsed[0];
  const bool reference_ok = !runs[0].diverged_at.has_value();
  std::vector<double> ns, diffs;
  for (std::size_t i = 0; i < n_values.size(); ++i) {
    ConvergenceEntry entry;
    entry.n_modes = n_values[i];
    entry.elapsed_seconds = elapsed[i + 1];
    entry.diverged_at = runs[i + 1].diverged_at;
    entry.valid = reference_ok && !entry.diverged_at.has_value();
    if (entry.valid) {
      const DifferenceNorms norms = sup_difference(runs[i + 1], runs[0], reference);
      entry.sup_diff = norms.sup_l2;
      entry.sup_diff_h1 = norms.sup_h1;
      ns.push_back(n_values[i]);
      diffs.push_back(entry.sup_diff);
    }
    report.entries.push_back(entry);
  }
  if (const auto slope = log_log_slope(ns, diffs)) report.fitted_decay_exponent = -*slope;
  return report;
}

StabilityComparison stability_comparison(const RunConfig& base) {
  validate(base);
  StabilityComparison out;
  RunConfig configs[2] = {base, base};
  configs[0].scheme = SchemeKind::Galerkin;
  configs[1].scheme = SchemeKind::SineBracket;
  Trajectory runs[2];
  double elapsed[2] = {0.0, 0.0};
  parallel_for(2, [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    runs[i] = integrate(configs[i]);
    elapsed[i] = seconds_since(start);
  });

  StabilityReport& r = out.report;
  r.n_modes = base.n_modes;
  r.dt = base.dt;
  r.t_end = base.t_end;
  r.tolerance = base.symmetry_tolerance;
  r.t_break_galerkin = detect_symmetry_breaking(runs[0], base.symmetry_tolerance);
  r.t_break_sine = detect_symmetry_breaking(runs[1], base.symmetry_tolerance);
  r.diverged_galerkin = runs[0].diverged_at;
  r.diverged_sine = runs[1].diverged_at;
  r.elapsed_galerkin = elapsed[0];
  r.elapsed_sine = elapsed[1];

  // A run that blew up before breaking symmetry did not reach t_end, so its
  // silence is not evidence of stability.
  const bool galerkin_reached_end = !r.diverged_galerkin.has_value();
  const bool sine_reached_end = !r.diverged_sine.has_value();
  if (r.t_break_galerkin && r.t_break_sine) {
    if (*r.t_break_galerkin > 0.0) r.ratio = *r.t_break_sine / *r.t_break_galerkin;
  } else if (r.t_break_galerkin && sine_reached_end) {
    if (*r.t_break_galerkin > 0.0) r.ratio_lower_bound = base.t_end / *r.t_break_galerkin;
  } else if (r.t_break_sine && galerkin_reached_end) {
    if (base.t_end > 0.0) r.ratio_upper_bound = *r.t_break_sine / base.t_end;
  }
  r.inconclusive = !r.ratio && !r.ratio_lower_bound && !r.ratio_upper_bound;

  out.galerkin = std::move(runs[0]);
  out.sine = std::move(runs[1]);
  return out;
}

StabilityReport stability_comparison(int n_modes, const InitialConditionSpec& initial, double dt,
                                      double t_end, double tol) {
  RunConfig base;
  base.n_modes = n_modes;
  base.initial_condition = initial;
  base.dt = dt;
  base.t_end = t_end;
  base.symmetry_tolerance = tol;
  base.record_every = 10;
  base.stop_on_symmetry_break = true;
  return stability_comparison(base).report;
}

std::optional<double> certified_stability_ratio(const StabilityReport& report) {
  if (report.ratio) return report.ratio;
  if (report.ratio_lower_bound) return report.ratio_lower_bound;
  return std::nullopt;
}

StructureConstantReport structure_constant_report(
    const std::vector<std::pair<Wavevector, Wavevector>>& pairs, const std::vector<int>& n_values) {
  StructureConstantReport report;
  for (const auto& [n, m] : pairs) {
    if (n.is_zero() || m.is_zero())
      throw std::invalid_argument("structure constant pairs must be nonzero wavevectors");
    std::vector<double> ns, gaps;
    for (const int big_n : n_values) {
      StructureConstantRow row{n, m, big_n, structure_constant_suN(n, m, big_n),
                               structure_constant_sdiff(n, m), 0.0};
      row.gap = std::abs(row.sdiff - row.su);
      report.rows.push_back(row);
      ns.push_back(big_n);
      gaps.push_back(row.gap);
    }
    StructureConstantOrder order{n, m, std::nullopt};
    if (cross_product(n, m) != 0)
      if (const auto slope = log_log_slope(ns, gaps)) order.empirical_order = -*slope;
    report.orders.push_back(order);
  }
  return report;
}

ResidualReport residual_report(const ModeField& field, const std::vector<int>& n_values) {
  ResidualReport report;
  report.field_modes = field.lattice().n_modes();
  for (const int big_n : n_values) {
    const Epsilon eps = Epsilon::for_modes(big_n);
    report.rows.push_back({big_n, eps.value, residual_sum(field, eps)});
  }
  return report;
}

ResidualReport residual_report(double sigma, std::uint64_t seed, const std::vector<int>& n_values,
                               int field_modes) {
  if (n_values.empty()) throw std::invalid_argument("residual_report needs N values");
  if (field_modes <= 0) field_modes = *std::min_element(n_values.begin(), n_values.end());
  const ModeField field = smooth_initial_condition(ModeLattice(field_modes), sigma, seed);
  ResidualReport report = residual_report(field, n_values);
  report.sigma = sigma;
  report.seed = seed;
  return report;
}

}  // namespace zeitlin
