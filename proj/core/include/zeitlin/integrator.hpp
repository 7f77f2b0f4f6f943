#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "zeitlin/brackets.hpp"
#include "zeitlin/initial_conditions.hpp"
#include "zeitlin/mode_field.hpp"

namespace zeitlin {

struct InitialConditionSpec {
  enum class Kind { Delta, Smooth, Explicit };

  Kind kind = Kind::Delta;
  // delta
  GridPoint x0{};
  double amplitude = 1.0;
  // smooth
  double sigma = 3.0;
  std::uint64_t seed = 0;
  int support_radius = -1;
  // explicit
  std::vector<std::pair<Wavevector, Complex>> modes;
};

ModeField make_initial_field(const ModeLattice& lattice, const InitialConditionSpec& spec);

struct RunConfig {
  SchemeKind scheme = SchemeKind::SineBracket;
  int n_modes = 11;
  double dt = 1e-3;
  double t_end = 1.0;
  int record_every = 10;
  InitialConditionSpec initial_condition{};
  double symmetry_tolerance = 1e-6;
  int casimir_pmax = 5;
  // Stop at the first record whose symmetry residual crosses the threshold.
  bool stop_on_symmetry_break = false;
  bool keep_snapshots = false;
  // Mode pairs (k, -k) sampled at every record.
  std::vector<Wavevector> tracked_modes;
};

/// Throws std::invalid_argument when the config is unusable, including when
/// t_end is not an integer multiple of dt.
void validate(const RunConfig& config);
std::int64_t step_count(const RunConfig& config);

struct DiagnosticsRecord {
  double t = 0.0;
  double energy = 0.0;
  double enstrophy = 0.0;
  std::vector<Complex> casimirs;  // tr W^p, p = 2 .. p_max (sine-bracket runs only)
  double symmetry_residual = 0.0;
  double l2_norm = 0.0;
};

DiagnosticsRecord diagnose(const ModeField& field, double t, int casimir_pmax);

struct ModeSample {
  Complex plus;   // ω_k
  Complex minus;  // ω_{-k}
};

struct Trajectory {
  RunConfig config;
  std::vector<DiagnosticsRecord> records;
  std::vector<ModeField> snapshots;               // parallel to records when kept
  std::vector<std::vector<ModeSample>> mode_samples;  // [record][tracked mode]
  std::optional<double> diverged_at;
  double initial_max_abs = 0.0;
};

/// Raised by rk4_step when the new state contains NaN or infinity.
class BlowUp : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using RhsFunction = std::function<ModeField(const ModeField&)>;

/// One classical RK4 step. Reality symmetry is not re-imposed.
ModeField rk4_step(const ModeField& field, double dt, SchemeKind scheme);
ModeField rk4_step(const ModeField& field, double dt, const RhsFunction& rhs);

/// Run config.scheme from the configured initial condition.
Trajectory integrate(const RunConfig& config);

/// Run an arbitrary right-hand side from an explicit initial field (used to
/// drive the matrix oracle through the same stepping loop). Casimirs are
/// recorded when record_casimirs is set.
Trajectory integrate(const RunConfig& config, const ModeField& initial, const RhsFunction& rhs,
                     bool record_casimirs);

/// Earliest record time with symmetry_residual > tol · initial max |ω_k|.
std::optional<double> detect_symmetry_breaking(const Trajectory& trajectory, double tol);

}  // namespace zeitlin
