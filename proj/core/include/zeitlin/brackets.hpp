#pragma once

#include <string_view>

#include "zeitlin/mode_field.hpp"

namespace zeitlin {

enum class SchemeKind { Galerkin, SineBracket };

std::string_view to_string(SchemeKind scheme);
/// Accepts "galerkin" and "sine" / "sine_bracket"; throws std::invalid_argument otherwise.
SchemeKind parse_scheme(std::string_view name);

/// Lattice spacing in the sine bracket, ε = 2π / N.
struct Epsilon {
  double value;

  static Epsilon for_modes(int n_modes);
  static Epsilon for_lattice(const ModeLattice& lattice) { return for_modes(lattice.n_modes()); }
};

/// Coefficient of L_{n+m} in [L_n, L_m] for sdiff(T²): n × m.
double structure_constant_sdiff(Wavevector n, Wavevector m);

/// Coefficient of L_{(n+m) mod N} in [L_n, L_m] for su(N):
/// (N / 2π) sin(2π (n × m) / N).
double structure_constant_suN(Wavevector n, Wavevector m, int n_modes);

/// Galerkin truncation of the vorticity equation:
///   dω_m/dt = Σ_{k≠0} (m × k) / k² · ω_{m+k} ω_{-k},
/// with ω_{m+k} = 0 whenever m + k leaves the box.
ModeField galerkin_rhs(const ModeField& field);

/// Sine-bracket (su(N)) truncation:
///   dω_m/dt = Σ_{k≠0} sin(ε m × k) / (ε k²) · ω_{(m+k) mod N} ω_{-k},
/// with the index m + k wrapped component-wise into the symmetric box.
ModeField sine_bracket_rhs(const ModeField& field);

ModeField scheme_rhs(SchemeKind scheme, const ModeField& field);

/// a^k_m(ε) = (m × k) / k² · (1 - sin(ε m × k) / (ε m × k)); zero when m × k = 0.
/// Requires k ≠ 0.
double residual_coefficient(Wavevector m, Wavevector k, Epsilon eps);

/// Σ_m |a_m(ε)|² with a_m = Σ_k a^k_m(ε) ω_{m+k} ω_{-k}.
///
/// The field is treated as an infinite sequence vanishing outside its box, so
/// m ranges over the doubled box where a_m can be nonzero and nothing wraps.
double residual_sum(const ModeField& field, Epsilon eps);

}  // namespace zeitlin
