#include "zeitlin/sun_matrix.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace zeitlin {

namespace {

void require_odd_order(int n_modes) {
  if (n_modes < 3 || n_modes % 2 == 0) {
    std::ostringstream msg;
    msg << "su(N) generators need odd N >= 3, got " << n_modes;
    throw std::invalid_argument(msg.str());
  }
}

int slot(long long c, int n) {
  const long long r = c % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

// e^{2πi r / N} for r = 0 .. N-1.
std::vector<Complex> unit_roots(int n) {
  std::vector<Complex> roots(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) roots[r] = std::polar(1.0, 2.0 * std::numbers::pi * r / n);
  return roots;
}

// 𝒥_n is monomial: row j has the single entry
// e^{2πi (n1 n2 + 2 j n1) / N} in column (j + n2) mod N.
int basis_exponent(Wavevector n, int j, int n_modes) {
  return slot(static_cast<long long>(n.m1) * n.m2 + 2LL * j * n.m1, n_modes);
}

}  // namespace

Generators build_generators(int n_modes) {
  require_odd_order(n_modes);
  const auto roots = unit_roots(n_modes);
  Generators gen{SuMatrix::Zero(n_modes, n_modes), SuMatrix::Zero(n_modes, n_modes),
                 std::polar(1.0, 4.0 * std::numbers::pi / n_modes)};
  for (int j = 0; j < n_modes; ++j) {
    gen.g(j, j) = roots[slot(2LL * j, n_modes)];  // λ^j = e^{4πi j / N}
    gen.h(j, (j + 1) % n_modes) = 1.0;
  }
  return gen;
}

SuMatrix basis_matrix(Wavevector n, int n_modes) {
  require_odd_order(n_modes);
  const ModeLattice lattice(n_modes);
  if (n.is_zero() || !lattice.contains(n)) {
    std::ostringstream msg;
    msg << "basis matrix index " << n << " must be nonzero and inside the N=" << n_modes
        << " lattice";
    throw std::invalid_argument(msg.str());
  }
  const auto roots = unit_roots(n_modes);
  SuMatrix out = SuMatrix::Zero(n_modes, n_modes);
  for (int j = 0; j < n_modes; ++j)
    out(j, slot(j + n.m2, n_modes)) = roots[basis_exponent(n, j, n_modes)];
  return out;
}

SuMatrix renormalized_basis_matrix(Wavevector n, int n_modes) {
  return Complex{0.0, n_modes / (4.0 * std::numbers::pi)} * basis_matrix(n, n_modes);
}

SuMatrix field_to_matrix(const ModeField& field) {
  const int n = field.lattice().n_modes();
  require_odd_order(n);
  const auto roots = unit_roots(n);
  SuMatrix w = SuMatrix::Zero(n, n);
  field.lattice().for_each([&](Wavevector k) {
    if (k.is_zero()) return;
    const Complex c = field[k];
    if (c == Complex{}) return;
    for (int j = 0; j < n; ++j) w(j, slot(j + k.m2, n)) += c * roots[basis_exponent(k, j, n)];
  });
  return w;
}

ModeField matrix_to_field(const SuMatrix& w) {
  if (w.rows() != w.cols()) throw std::invalid_argument("matrix_to_field needs a square matrix");
  const int n = static_cast<int>(w.rows());
  require_odd_order(n);
  const auto roots = unit_roots(n);
  const ModeLattice lattice(n);
  ModeField field(lattice);
  lattice.for_each([&](Wavevector k) {
    if (k.is_zero()) return;
    Complex acc{};
    for (int j = 0; j < n; ++j)
      acc += std::conj(roots[basis_exponent(k, j, n)]) * w(j, slot(j + k.m2, n));
    field[k] = acc / static_cast<double>(n);
  });
  return field;
}

Complex commutator_scale(int n_modes) {
  return Complex{0.0, -kGeneratorCommutationExponent * n_modes / (4.0 * std::numbers::pi)};
}

ModeField commutator_rhs(const ModeField& field) {
  const int n = field.lattice().n_modes();
  ModeField weighted(field.lattice());
  field.lattice().for_each([&](Wavevector k) {
    if (!k.is_zero()) weighted[k] = field[k] / static_cast<double>(k.norm2());
  });
  const SuMatrix w = field_to_matrix(field);
  const SuMatrix psi = field_to_matrix(weighted);
  const SuMatrix bracket = psi * w - w * psi;
  ModeField out = matrix_to_field(bracket);
  out *= commutator_scale(n);
  return out;
}

std::vector<Complex> trace_casimirs(const SuMatrix& w, int p_max) {
  if (p_max < 2) throw std::invalid_argument("trace_casimirs needs p_max >= 2");
  std::vector<Complex> out;
  out.reserve(static_cast<std::size_t>(p_max - 1));
  SuMatrix power = w;
  for (int p = 2; p <= p_max; ++p) {
    power = power * w;
    out.push_back(power.trace());
  }
  return out;
}

double renormalized_basis_norm(Wavevector n, int n_modes) {
  return renormalized_basis_matrix(n, n_modes).norm();
}

}  // namespace zeitlin
