#include "zeitlin/mode_field.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace zeitlin {

namespace {

void require_same_lattice(const ModeField& a, const ModeField& b) {
  if (!(a.lattice() == b.lattice()))
    throw std::invalid_argument("mode fields live on different lattices");
}

}  // namespace

ModeField::ModeField(ModeLattice lattice)
    : lattice_(lattice), coeffs_(lattice.size(), Complex{}) {}

ModeField::ModeField(ModeLattice lattice, std::vector<Complex> coeffs)
    : lattice_(lattice), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != lattice_.size())
    throw std::invalid_argument("coefficient count does not match lattice size");
}

ModeField& ModeField::operator+=(const ModeField& other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

ModeField& ModeField::operator-=(const ModeField& other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

ModeField& ModeField::operator*=(Complex s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

ModeField& ModeField::add_scaled(double s, const ModeField& other) {
  require_same_lattice(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += s * other.coeffs_[i];
  return *this;
}

ModeField inverse_laplacian(const ModeField& field) {
  ModeField psi(field.lattice());
  field.lattice().for_each([&](Wavevector k) {
    if (!k.is_zero()) psi[k] = -field[k] / static_cast<double>(k.norm2());
  });
  return psi;
}

double reality_residual(const ModeField& field) {
  double worst = 0.0;
  field.lattice().for_each([&](Wavevector k) {
    worst = std::max(worst, std::abs(field[k] - std::conj(field[-k])));
  });
  return worst;
}

ModeField enforce_reality(const ModeField& field) {
  ModeField out(field.lattice());
  field.lattice().for_each([&](Wavevector k) {
    if (k.is_zero()) return;
    // Only the upper half-plane is computed; the mirror is its exact conjugate.
    if (k.m1 > 0 || (k.m1 == 0 && k.m2 > 0)) {
      const Complex sym = 0.5 * (field[k] + std::conj(field[-k]));
      out[k] = sym;
      out[-k] = std::conj(sym);
    }
  });
  return out;
}

double enstrophy(const ModeField& field) {
  double s = 0.0;
  for (const auto& c : field.coeffs()) s += std::norm(c);
  return s;
}

double energy(const ModeField& field) {
  double s = 0.0;
  field.lattice().for_each([&](Wavevector k) {
    if (!k.is_zero()) s += std::norm(field[k]) / k.norm2();
  });
  return 0.5 * s;
}

double l2_norm(const ModeField& field) { return std::sqrt(enstrophy(field)); }

double max_abs(const ModeField& field) {
  double m = 0.0;
  for (const auto& c : field.coeffs()) m = std::max(m, std::abs(c));
  return m;
}

double sobolev_norm2(const ModeField& field, double order) {
  double s = 0.0;
  field.lattice().for_each([&](Wavevector k) {
    s += std::norm(field[k]) * std::pow(1.0 + k.norm2(), order);
  });
  return s;
}

bool all_finite(const ModeField& field) {
  return std::all_of(field.coeffs().begin(), field.coeffs().end(), [](const Complex& c) {
    return std::isfinite(c.real()) && std::isfinite(c.imag());
  });
}

ModeField embed(const ModeField& field, const ModeLattice& target) {
  if (target.n_modes() < field.lattice().n_modes())
    throw std::invalid_argument("embed target lattice is smaller than the source");
  ModeField out(target);
  field.lattice().for_each([&](Wavevector k) { out[k] = field[k]; });
  return out;
}

ModeField truncate(const ModeField& field, const ModeLattice& target) {
  if (target.n_modes() > field.lattice().n_modes())
    throw std::invalid_argument("truncate target lattice is larger than the source");
  ModeField out(target);
  target.for_each([&](Wavevector k) { out[k] = field[k]; });
  return out;
}

}  // namespace zeitlin
