#include "zeitlin/integrator.hpp"

#include <cmath>
#include <sstream>

#include "zeitlin/sun_matrix.hpp"

namespace zeitlin {

namespace {

[[noreturn]] void reject(const std::string& what) {
  throw std::invalid_argument("invalid run config: " + what);
}

}  // namespace

ModeField make_initial_field(const ModeLattice& lattice, const InitialConditionSpec& spec) {
  switch (spec.kind) {
    case InitialConditionSpec::Kind::Delta:
      return delta_initial_condition(lattice, spec.x0, spec.amplitude);
    case InitialConditionSpec::Kind::Smooth:
      return smooth_initial_condition(lattice, spec.sigma, spec.seed, spec.support_radius);
    case InitialConditionSpec::Kind::Explicit:
      return explicit_initial_condition(lattice, spec.modes);
  }
  throw std::invalid_argument("unknown initial condition kind");
}

std::int64_t step_count(const RunConfig& config) {
  return static_cast<std::int64_t>(std::llround(config.t_end / config.dt));
}

void validate(const RunConfig& config) {
  if (config.n_modes < 3 || config.n_modes % 2 == 0)
    reject("N must be odd and >= 3, got " + std::to_string(config.n_modes));
  if (!(config.dt > 0.0) || !std::isfinite(config.dt)) reject("dt must be positive");
  if (!(config.t_end >= 0.0) || !std::isfinite(config.t_end)) reject("t_end must be >= 0");
  if (config.record_every < 1) reject("record_every must be >= 1");
  if (!(config.symmetry_tolerance >= 0.0)) reject("symmetry_tolerance must be >= 0");
  if (config.casimir_pmax < 2) reject("casimir_pmax must be >= 2");
  const double steps = config.t_end / config.dt;
  if (std::abs(steps - std::round(steps)) > 1e-9 * std::max(1.0, steps)) {
    std::ostringstream msg;
    msg << "t_end=" << config.t_end << " is not a whole number of dt=" << config.dt << " steps";
    reject(msg.str());
  }
  const ModeLattice lattice(config.n_modes);
  for (const auto& k : config.tracked_modes) {
    if (!lattice.contains(k) || k.is_zero()) {
      std::ostringstream msg;
      msg << "tracked mode " << k << " is not a nonzero mode of the N=" << config.n_modes
          << " lattice";
      reject(msg.str());
    }
  }
}

DiagnosticsRecord diagnose(const ModeField& field, double t, int casimir_pmax) {
  DiagnosticsRecord rec;
  rec.t = t;
  rec.energy = energy(field);
  rec.enstrophy = enstrophy(field);
  rec.symmetry_residual = reality_residual(field);
  rec.l2_norm = std::sqrt(rec.enstrophy);
  if (casimir_pmax >= 2) rec.casimirs = trace_casimirs(field_to_matrix(field), casimir_pmax);
  return rec;
}

ModeField rk4_step(const ModeField& field, double dt, SchemeKind scheme) {
  return rk4_step(field, dt, [scheme](const ModeField& f) { return scheme_rhs(scheme, f); });
}

ModeField rk4_step(const ModeField& field, double dt, const RhsFunction& rhs) {
  const ModeField k1 = rhs(field);
  ModeField stage = field;
  stage.add_scaled(0.5 * dt, k1);
  const ModeField k2 = rhs(stage);
  stage = field;
  stage.add_scaled(0.5 * dt, k2);
  const ModeField k3 = rhs(stage);
  stage = field;
  stage.add_scaled(dt, k3);
  const ModeField k4 = rhs(stage);

  ModeField next = field;
  auto out = next.coeffs();
  const auto a = k1.coeffs();
  const auto b = k2.coeffs();
  const auto c = k3.coeffs();
  const auto d = k4.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += (dt / 6.0) * (a[i] + 2.0 * b[i] + 2.0 * c[i] + d[i]);
  if (!all_finite(next)) throw BlowUp("non-finite mode amplitude after RK4 step");
  return next;
}

Trajectory integrate(const RunConfig& config) {
  validate(config);
  const ModeLattice lattice(config.n_modes);
  const ModeField initial = make_initial_field(lattice, config.initial_condition);
  const SchemeKind scheme = config.scheme;
  return integrate(
      config, initial, [scheme](const ModeField& f) { return scheme_rhs(scheme, f); },
      scheme == SchemeKind::SineBracket);
}

Trajectory integrate(const RunConfig& config, const ModeField& initial, const RhsFunction& rhs,
                     bool record_casimirs) {
  validate(config);
  if (initial.lattice().n_modes() != config.n_modes)
    reject("initial field lattice does not match N");

  Trajectory traj;
  traj.config = config;
  traj.initial_max_abs = max_abs(initial);
  const double threshold = config.symmetry_tolerance * traj.initial_max_abs;
  const int pmax = record_casimirs ? config.casimir_pmax : 0;

  auto record = [&](const ModeField& state, std::int64_t step) {
    traj.records.push_back(diagnose(state, static_cast<double>(step) * config.dt, pmax));
    if (config.keep_snapshots) traj.snapshots.push_back(state);
    if (!config.tracked_modes.empty()) {
      std::vector<ModeSample> samples;
      samples.reserve(config.tracked_modes.size());
      for (const auto& k : config.tracked_modes) samples.push_back({state[k], state[-k]});
      traj.mode_samples.push_back(std::move(samples));
    }
    return traj.records.back().symmetry_residual > threshold;
  };

  ModeField state = initial;
  bool broken = record(state, 0);
  const std::int64_t steps = step_count(config);
  for (std::int64_t s = 1; s <= steps; ++s) {
    if (config.stop_on_symmetry_break && broken) break;
    try {
      state = rk4_step(state, config.dt, rhs);
    } catch (const BlowUp&) {
      traj.diverged_at = static_cast<double>(s) * config.dt;
      break;
    }
    if (s % config.record_every == 0 || s == steps) broken = record(state, s);
  }
  return traj;
}

std::optional<double> detect_symmetry_breaking(const Trajectory& trajectory, double tol) {
  const double threshold = tol * trajectory.initial_max_abs;
  for (const auto& rec : trajectory.records)
    if (rec.symmetry_residual > threshold) return rec.t;
  return std::nullopt;
}

}  // namespace zeitlin
