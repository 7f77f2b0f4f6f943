#include "zeitlin/lattice.hpp"

#include <stdexcept>
#include <string>

namespace zeitlin {

std::ostream& operator<<(std::ostream& os, Wavevector k) {
  return os << '(' << k.m1 << ',' << k.m2 << ')';
}

ModeLattice::ModeLattice(int n_modes) : n_(n_modes), half_((n_modes - 1) / 2) {
  if (n_modes < 1 || n_modes % 2 == 0)
    throw std::invalid_argument("mode lattice size must be odd and positive, got " +
                                std::to_string(n_modes));
}

Wavevector ModeLattice::wavevector(std::size_t index) const {
  const int a = static_cast<int>(index / static_cast<std::size_t>(n_));
  const int b = static_cast<int>(index % static_cast<std::size_t>(n_));
  return {a > half_ ? a - n_ : a, b > half_ ? b - n_ : b};
}

}  // namespace zeitlin
