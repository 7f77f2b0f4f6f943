#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zeitlin/mode_field.hpp"

namespace zeitlin {

/// Point x = (2π j1 / N, 2π j2 / N) of the uniform N x N physical grid.
struct GridPoint {
  int j1 = 0;
  int j2 = 0;
  friend constexpr bool operator==(GridPoint, GridPoint) = default;
};

/// Delta-like vorticity ω(x) ∝ N² δ(x, x0) - 1: ω_k = amplitude · exp(-i k·x0)
/// for every k ≠ 0, ω_0 = 0.
ModeField delta_initial_condition(const ModeLattice& lattice, GridPoint x0,
                                  double amplitude = 1.0);

/// Random field in H^σ: ω_k = c_k (1 + k²)^(-σ/2) with |c_k| < 1.
///
/// The c_k are drawn from a 64-bit Mersenne twister seeded with `seed`, one
/// (modulus, phase) pair per wavevector of the upper half-plane in
/// lexicographic order; the lower half-plane is the conjugate mirror. When
/// support_radius >= 0, modes with max(|k1|,|k2|) > support_radius are zero
/// (and consume no draws). Throws std::invalid_argument for σ <= 2.
ModeField smooth_initial_condition(const ModeLattice& lattice, double sigma,
                                   std::uint64_t seed, int support_radius = -1);

/// Field from explicit (k, ω_k) pairs. Each pair also sets ω_{-k} = conj(ω_k);
/// the origin is ignored. Throws if some k lies outside the lattice.
ModeField explicit_initial_condition(const ModeLattice& lattice,
                                     const std::vector<std::pair<Wavevector, Complex>>& modes);

}  // namespace zeitlin
