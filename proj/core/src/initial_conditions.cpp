#include "zeitlin/initial_conditions.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>
#include <stdexcept>

namespace zeitlin {

namespace {

bool upper_half(Wavevector k) { return k.m1 > 0 || (k.m1 == 0 && k.m2 > 0); }

// Portable [0,1) double from the top 53 bits.
double unit_uniform(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

int positive_mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace

ModeField delta_initial_condition(const ModeLattice& lattice, GridPoint x0, double amplitude) {
  const int n = lattice.n_modes();
  ModeField field(lattice);
  lattice.for_each([&](Wavevector k) {
    if (!upper_half(k)) return;
    // k·x0 = 2π (k1 j1 + k2 j2) / N, reduced mod N before taking the phase.
    const int r = positive_mod(static_cast<long long>(k.m1) * x0.j1 +
                                   static_cast<long long>(k.m2) * x0.j2,
                               n);
    const double phase = -2.0 * std::numbers::pi * r / n;
    const Complex value = r == 0 ? Complex{amplitude, 0.0} : std::polar(amplitude, phase);
    field[k] = value;
    field[-k] = std::conj(value);
  });
  return field;
}

ModeField smooth_initial_condition(const ModeLattice& lattice, double sigma,
                                   std::uint64_t seed, int support_radius) {
  if (!(sigma > 2.0)) {
    std::ostringstream msg;
    msg << "smooth initial condition needs sigma > 2, got " << sigma;
    throw std::invalid_argument(msg.str());
  }
  std::mt19937_64 gen(seed);
  ModeField field(lattice);
  lattice.for_each([&](Wavevector k) {
    if (!upper_half(k)) return;
    if (support_radius >= 0 && (std::abs(k.m1) > support_radius || std::abs(k.m2) > support_radius))
      return;
    const double modulus = unit_uniform(gen);
    const double phase = 2.0 * std::numbers::pi * unit_uniform(gen);
    const Complex c = std::polar(modulus, phase);
    const Complex value = c * std::pow(1.0 + k.norm2(), -0.5 * sigma);
    field[k] = value;
    field[-k] = std::conj(value);
  });
  return field;
}

ModeField explicit_initial_condition(const ModeLattice& lattice,
                                     const std::vector<std::pair<Wavevector, Complex>>& modes) {
  ModeField field(lattice);
  for (const auto& [k, value] : modes) {
    if (!lattice.contains(k)) {
      std::ostringstream msg;
      msg << "explicit mode " << k << " lies outside the N=" << lattice.n_modes() << " lattice";
      throw std::invalid_argument(msg.str());
    }
    if (k.is_zero()) continue;
    field[k] = value;
    field[-k] = std::conj(value);
  }
  return field;
}

}  // namespace zeitlin
