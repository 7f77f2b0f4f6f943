#pragma once

#include <cstddef>
#include <ostream>

namespace zeitlin {

/// Integer wavevector (m1, m2) labelling a Fourier mode of the vorticity.
struct Wavevector {
  int m1 = 0;
  int m2 = 0;

  constexpr bool is_zero() const { return m1 == 0 && m2 == 0; }
  constexpr int norm2() const { return m1 * m1 + m2 * m2; }

  constexpr Wavevector operator-() const { return {-m1, -m2}; }
  friend constexpr Wavevector operator+(Wavevector a, Wavevector b) {
    return {a.m1 + b.m1, a.m2 + b.m2};
  }
  friend constexpr Wavevector operator-(Wavevector a, Wavevector b) {
    return {a.m1 - b.m1, a.m2 - b.m2};
  }
  friend constexpr bool operator==(Wavevector, Wavevector) = default;
};

std::ostream& operator<<(std::ostream& os, Wavevector k);

/// m × n = m1 n2 - m2 n1.
constexpr int cross_product(Wavevector m, Wavevector n) {
  return m.m1 * n.m2 - m.m2 * n.m1;
}

/// Symmetric box of N x N wavevectors, -(N-1)/2 <= m_i <= (N-1)/2, N odd.
///
/// Storage order for fields on the lattice is by wrapped index: component
/// m_i is stored at slot m_i mod N, so k and k + N a share a slot. The origin
/// is part of the box but excluded from the dynamics.
class ModeLattice {
 public:
  explicit ModeLattice(int n_modes);

  int n_modes() const { return n_; }
  int half_width() const { return half_; }
  std::size_t size() const { return static_cast<std::size_t>(n_) * n_; }

  bool contains(Wavevector k) const {
    return k.m1 >= -half_ && k.m1 <= half_ && k.m2 >= -half_ && k.m2 <= half_;
  }

  /// Reduce each component mod N into the symmetric range.
  Wavevector wrap(Wavevector k) const { return {wrap_component(k.m1), wrap_component(k.m2)}; }
  int wrap_component(int c) const {
    int r = c % n_;
    if (r > half_) r -= n_;
    if (r < -half_) r += n_;
    return r;
  }

  /// Storage slot of k (k need not lie in the box; it is reduced mod N).
  std::size_t index(Wavevector k) const {
    return static_cast<std::size_t>(slot(k.m1)) * n_ + slot(k.m2);
  }
  Wavevector wavevector(std::size_t index) const;

  /// Visit every wavevector in lexicographic order (m1 outer, m2 inner).
  template <class F>
  void for_each(F&& f) const {
    for (int a = -half_; a <= half_; ++a)
      for (int b = -half_; b <= half_; ++b) f(Wavevector{a, b});
  }

  friend bool operator==(const ModeLattice&, const ModeLattice&) = default;

 private:
  int slot(int c) const {
    int r = c % n_;
    return r < 0 ? r + n_ : r;
  }

  int n_;
  int half_;
};

}  // namespace zeitlin
