#pragma once

#include <vector>

#include <Eigen/Dense>

#include "zeitlin/mode_field.hpp"

namespace zeitlin {

/// Dense N x N complex matrix in the gl(N) representation.
using SuMatrix = Eigen::MatrixXcd;

/// Exponent s in g h = λ^s h g for the generator layouts below
/// (g = diag(1, λ, ..., λ^{N-1}), h with ones at (j, j+1 mod N)).
/// Fixed by direct multiplication; see sun_matrix_test.
inline constexpr int kGeneratorCommutationExponent = -1;

struct Generators {
  SuMatrix g;
  SuMatrix h;
  Complex lambda;  // e^{4πi/N}
};

/// Clock and shift generators for odd N >= 3.
Generators build_generators(int n_modes);

/// 𝒥_n = λ^{n1 n2 / 2} g^{n1} h^{n2}, with λ^{n1 n2 / 2} taken as
/// e^{2πi n1 n2 / N}. Throws for n = 0 or n outside the lattice.
SuMatrix basis_matrix(Wavevector n, int n_modes);

/// Renormalised generator L_n = (iN / 4π) 𝒥_n. With the convention above,
/// [L_n, L_m] = (N / 2π) sin(2π (n × m) / N) L_{(n+m) mod N}.
SuMatrix renormalized_basis_matrix(Wavevector n, int n_modes);

/// Sign σ in [L_n, L_m] = σ (N / 2π) sin(2π n×m / N) L_{n+m}; follows from
/// kGeneratorCommutationExponent.
inline constexpr int kCommutationSign = -kGeneratorCommutationExponent;

/// W = Σ_{n≠0} ω_n 𝒥_n.
SuMatrix field_to_matrix(const ModeField& field);

/// Inverse of field_to_matrix through tr(𝒥_m† 𝒥_n) = N δ_mn. The identity
/// component of W is discarded.
ModeField matrix_to_field(const SuMatrix& w);

/// Scalar α with sine_bracket_rhs(ω) = α · matrix_to_field([Ψ_W, W]) where
/// Ψ_k = ω_k / k²: α = -s · iN / (4π).
Complex commutator_scale(int n_modes);

/// Sine-bracket right-hand side evaluated through explicit matrix commutators.
ModeField commutator_rhs(const ModeField& field);

/// tr W^p for p = 2 .. p_max. Throws if p_max < 2.
std::vector<Complex> trace_casimirs(const SuMatrix& w, int p_max);

/// Frobenius norm of (iN / 4π) 𝒥_n, which is N^{3/2} / (4π) for every n.
double renormalized_basis_norm(Wavevector n, int n_modes);

}  // namespace zeitlin
