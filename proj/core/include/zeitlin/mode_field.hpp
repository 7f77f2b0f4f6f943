#pragma once

#include <complex>
#include <span>
#include <vector>

#include "zeitlin/lattice.hpp"

namespace zeitlin {

using Complex = std::complex<double>;

/// Complex Fourier coefficients of a vorticity-like field over a ModeLattice.
///
/// Fields built by the constructors in initial_conditions.hpp satisfy the
/// zero-mean and reality invariants exactly. The container itself does not
/// enforce them: time stepping is allowed to break reality symmetry, and that
/// breakdown is what reality_residual() measures.
class ModeField {
 public:
  explicit ModeField(ModeLattice lattice);
  ModeField(ModeLattice lattice, std::vector<Complex> coeffs);

  const ModeLattice& lattice() const { return lattice_; }

  Complex operator[](Wavevector k) const { return coeffs_[lattice_.index(k)]; }
  Complex& operator[](Wavevector k) { return coeffs_[lattice_.index(k)]; }

  /// Coefficients in storage (wrapped-index) order.
  std::span<const Complex> coeffs() const { return coeffs_; }
  std::span<Complex> coeffs() { return coeffs_; }

  ModeField& operator+=(const ModeField& other);
  ModeField& operator-=(const ModeField& other);
  ModeField& operator*=(Complex s);

  friend ModeField operator+(ModeField a, const ModeField& b) { return a += b; }
  friend ModeField operator-(ModeField a, const ModeField& b) { return a -= b; }
  friend ModeField operator*(Complex s, ModeField a) { return a *= s; }

  /// this += s * other
  ModeField& add_scaled(double s, const ModeField& other);

  friend bool operator==(const ModeField&, const ModeField&) = default;

 private:
  ModeLattice lattice_;
  std::vector<Complex> coeffs_;
};

/// Stream function with Δψ = ω under the symbol Δ -> -k²: ψ_k = -ω_k / k².
ModeField inverse_laplacian(const ModeField& field);

/// max_k |c(k) - conj(c(-k))| over the whole lattice.
double reality_residual(const ModeField& field);

/// Symmetrise to c(k) = (c(k) + conj(c(-k))) / 2 and pin the origin to zero.
ModeField enforce_reality(const ModeField& field);

double enstrophy(const ModeField& field);       // Σ |ω_k|²
double energy(const ModeField& field);          // ½ Σ |ω_k|² / k²
double l2_norm(const ModeField& field);         // sqrt(Σ |ω_k|²)
double max_abs(const ModeField& field);         // max |ω_k|
double sobolev_norm2(const ModeField& field, double order);  // Σ |ω_k|² (1+k²)^order

bool all_finite(const ModeField& field);

/// Copy into a larger lattice, zero outside the original box.
ModeField embed(const ModeField& field, const ModeLattice& target);
/// Restrict to a smaller lattice, dropping modes outside it.
ModeField truncate(const ModeField& field, const ModeLattice& target);

}  // namespace zeitlin
