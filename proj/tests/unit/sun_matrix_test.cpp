#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "support/oracles.hpp"
#include "zeitlin/brackets.hpp"
#include "zeitlin/sun_matrix.hpp"

namespace zeitlin {
namespace {

using std::numbers::pi;
using testing::max_mode_difference;
using testing::random_real_field;

double max_entry(const SuMatrix& m) { return m.cwiseAbs().maxCoeff(); }

TEST(Generators, ClockEntriesAtN3) {
  const Generators gen = build_generators(3);
  const Complex lambda = std::exp(Complex(0.0, 4 * pi / 3));
  EXPECT_NEAR(std::abs(gen.lambda - lambda), 0.0, 1e-15);
  for (int j = 0; j < 3; ++j) {
    EXPECT_NEAR(std::abs(gen.g(j, j) - std::pow(lambda, j)), 0.0, 1e-14);
    for (int i = 0; i < 3; ++i)
      if (i != j) EXPECT_EQ(gen.g(i, j), Complex(0.0));
  }
}

TEST(Generators, UnitaryAndOfOrderN) {
  for (int n : {3, 5, 7}) {
    const Generators gen = build_generators(n);
    const SuMatrix id = SuMatrix::Identity(n, n);
    EXPECT_LT(max_entry(gen.g * gen.g.adjoint() - id), 1e-14);
    EXPECT_LT(max_entry(gen.h * gen.h.adjoint() - id), 1e-14);
    SuMatrix gp = id, hp = id;
    for (int i = 0; i < n; ++i) {
      gp = gp * gen.g;
      hp = hp * gen.h;
    }
    EXPECT_LT(max_entry(gp - id), 1e-12);
    EXPECT_LT(max_entry(hp - id), 1e-14);
    EXPECT_NEAR(gen.g.norm(), std::sqrt(n), 1e-13);
    EXPECT_NEAR(gen.h.norm(), std::sqrt(n), 1e-13);
  }
}

TEST(Generators, CommutationExponentByDirectMultiplication) {
  for (int n : {3, 5, 9}) {
    const Generators gen = build_generators(n);
    const SuMatrix lhs = gen.g * gen.h;
    const SuMatrix rhs = std::pow(gen.lambda, kGeneratorCommutationExponent) * gen.h * gen.g;
    EXPECT_LT(max_entry(lhs - rhs), 1e-14) << "N=" << n;
    const SuMatrix wrong = std::pow(gen.lambda, -kGeneratorCommutationExponent) * gen.h * gen.g;
    EXPECT_GT(max_entry(lhs - wrong), 0.1);
  }
}

TEST(Generators, RejectEvenOrSmallN) {
  EXPECT_THROW(build_generators(4), std::invalid_argument);
  EXPECT_THROW(build_generators(1), std::invalid_argument);
  EXPECT_THROW(build_generators(-5), std::invalid_argument);
}

TEST(BasisMatrix, MatchesGeneratorProduct) {
  const int n = 7;
  const Generators gen = build_generators(n);
  const ModeLattice lat(n);
  lat.for_each([&](Wavevector k) {
    if (k.is_zero()) return;
    SuMatrix expected = SuMatrix::Identity(n, n);
    for (int i = 0; i < ((k.m1 % n) + n) % n; ++i) expected = expected * gen.g;
    for (int i = 0; i < ((k.m2 % n) + n) % n; ++i) expected = expected * gen.h;
    expected *= std::exp(Complex(0.0, 2 * pi * k.m1 * k.m2 / n));
    EXPECT_LT(max_entry(basis_matrix(k, n) - expected), 1e-12) << k;
  });
}

TEST(BasisMatrix, UnitaryWithAdjointAtMinusN) {
  const int n = 5;
  ModeLattice(n).for_each([&](Wavevector k) {
    if (k.is_zero()) return;
    const SuMatrix j = basis_matrix(k, n);
    EXPECT_NEAR(j.norm(), std::sqrt(n), 1e-13);
    EXPECT_LT(max_entry(j * j.adjoint() - SuMatrix::Identity(n, n)), 1e-14);
    EXPECT_LT(max_entry(j.adjoint() - basis_matrix(-k, n)), 1e-14);
  });
  EXPECT_THROW(basis_matrix({0, 0}, n), std::invalid_argument);
  EXPECT_THROW(basis_matrix({3, 0}, n), std::invalid_argument);
}

TEST(BasisMatrix, TracePairingOrthogonalAtN5) {
  const int n = 5;
  const ModeLattice lat(n);
  lat.for_each([&](Wavevector a) {
    if (a.is_zero()) return;
    lat.for_each([&](Wavevector b) {
      if (b.is_zero()) return;
      const Complex t = (basis_matrix(a, n).adjoint() * basis_matrix(b, n)).trace();
      const Complex expected = a == b ? Complex(n) : Complex(0.0);
      EXPECT_NEAR(std::abs(t - expected), 0.0, 1e-12) << a << b;
    });
  });
}

TEST(BasisMatrix, CommutatorOfUnitPair) {
  // [L_(1,0), L_(0,1)] = (5/2π) sin(2π/5) L_(1,1) with the sign fixed by the
  // generator layout.
  const int n = 5;
  const SuMatrix a = renormalized_basis_matrix({1, 0}, n);
  const SuMatrix b = renormalized_basis_matrix({0, 1}, n);
  const SuMatrix c = renormalized_basis_matrix({1, 1}, n);
  const SuMatrix comm = a * b - b * a;
  const double coeff = kCommutationSign * structure_constant_suN({1, 0}, {0, 1}, n);
  EXPECT_NEAR(std::abs(coeff), 0.756827, 5e-7);
  EXPECT_LT(max_entry(comm - coeff * c), 1e-13);
}

TEST(BasisMatrix, CommutationRelationAllPairsN7) {
  const int n = 7;
  const ModeLattice lat(n);
  double worst = 0.0;
  lat.for_each([&](Wavevector a) {
    if (a.is_zero()) return;
    const SuMatrix la = renormalized_basis_matrix(a, n);
    lat.for_each([&](Wavevector b) {
      if (b.is_zero()) return;
      const SuMatrix lb = renormalized_basis_matrix(b, n);
      const SuMatrix comm = la * lb - lb * la;
      const Wavevector s = lat.wrap(a + b);
      const double coeff = kCommutationSign * structure_constant_suN(a, b, n);
      const SuMatrix expected =
          s.is_zero() ? SuMatrix::Zero(n, n) : SuMatrix(coeff * renormalized_basis_matrix(s, n));
      worst = std::max(worst, max_entry(comm - expected));
    });
  });
  EXPECT_LT(worst, 1e-12);
}

TEST(FieldMatrix, ZeroAndSingleMode) {
  const int n = 5;
  const ModeLattice lat(n);
  EXPECT_EQ(max_entry(field_to_matrix(ModeField(lat))), 0.0);
  EXPECT_EQ(matrix_to_field(SuMatrix::Zero(n, n)), ModeField(lat));

  ModeField w(lat);
  w[wv(1, 0)] = 1.0;
  w[wv(-1, 0)] = 1.0;
  const SuMatrix expected = basis_matrix({1, 0}, n) + basis_matrix({-1, 0}, n);
  EXPECT_LT(max_entry(field_to_matrix(w) - expected), 1e-15);
}

TEST(FieldMatrix, RoundTripAndHermitian) {
  for (int n : {5, 7, 11}) {
    const ModeField w = random_real_field(n, 31 * n);
    const SuMatrix m = field_to_matrix(w);
    EXPECT_LT(max_entry(m - m.adjoint()), 1e-13);
    EXPECT_LT(max_mode_difference(matrix_to_field(m), w), 1e-12);
  }
  const ModeField c = testing::random_complex_field(7, 3);
  EXPECT_LT(max_mode_difference(matrix_to_field(field_to_matrix(c)), c), 1e-12);
}

TEST(FieldMatrix, IdentityComponentDiscarded) {
  const int n = 5;
  const ModeField w = random_real_field(n, 9);
  const SuMatrix m = field_to_matrix(w) + 3.0 * SuMatrix::Identity(n, n);
  EXPECT_LT(max_mode_difference(matrix_to_field(m), w), 1e-13);
}

TEST(CommutatorRhs, ScaleMagnitude) {
  for (int n : {5, 9}) EXPECT_NEAR(std::abs(commutator_scale(n)), n / (4 * pi), 1e-15);
  EXPECT_EQ(commutator_scale(5).real(), 0.0);
}

TEST(CommutatorRhs, ZeroAndEigenfunction) {
  const int n = 7;
  const ModeLattice lat(n);
  EXPECT_LT(max_abs(commutator_rhs(ModeField(lat))), 1e-300);
  ModeField w(lat);
  for (Wavevector k : {Wavevector{1, 0}, Wavevector{-1, 0}, Wavevector{0, 1}, Wavevector{0, -1}})
    w[k] = 1.0;
  EXPECT_LT(max_abs(commutator_rhs(w)), 1e-13);
}

TEST(CommutatorRhs, MatchesSineBracket) {
  for (int n : {3, 5, 7, 9})
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const ModeField w = random_real_field(n, 1000 + seed);
      EXPECT_LT(max_mode_difference(commutator_rhs(w), sine_bracket_rhs(w)), 1e-12) << "N=" << n;
    }
}

TEST(TraceCasimirs, ZeroAndExplicitPowers) {
  const int n = 5;
  for (const Complex& t : trace_casimirs(SuMatrix::Zero(n, n), 5)) EXPECT_EQ(t, Complex(0.0));

  const SuMatrix w = basis_matrix({1, 0}, n) + basis_matrix({-1, 0}, n);
  // Entry-by-entry power oracle, independent of Eigen's product kernels.
  auto multiply = [n](const SuMatrix& a, const SuMatrix& b) {
    SuMatrix c = SuMatrix::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) c(i, j) += a(i, k) * b(k, j);
    return c;
  };
  const std::vector<Complex> traces = trace_casimirs(w, 4);
  ASSERT_EQ(traces.size(), 3u);
  SuMatrix power = w;
  for (int p = 2; p <= 4; ++p) {
    power = multiply(power, w);
    Complex tr = 0.0;
    for (int i = 0; i < n; ++i) tr += power(i, i);
    EXPECT_NEAR(std::abs(traces[p - 2] - tr), 0.0, 1e-12) << "p=" << p;
  }
  // W is diagonal with entries 2cos(4πj/5); tr W² = Σ 4cos² = 2N = 10.
  EXPECT_NEAR(traces[0].real(), 10.0, 1e-13);
  EXPECT_THROW(trace_casimirs(w, 1), std::invalid_argument);
}

TEST(TraceCasimirs, QuadraticMatchesEnstrophy) {
  // tr W² = N Σ ω_n ω_{-n} = N · enstrophy for a real field.
  const int n = 9;
  const ModeField w = random_real_field(n, 4);
  const Complex t2 = trace_casimirs(field_to_matrix(w), 2)[0];
  EXPECT_NEAR(t2.real(), n * enstrophy(w), 1e-10);
  EXPECT_NEAR(t2.imag(), 0.0, 1e-10);
}

TEST(RenormalizedBasisNorm, ClosedForm) {
  EXPECT_NEAR(renormalized_basis_norm({1, 0}, 5), 0.889703, 5e-7);
  for (int n : {5, 11, 25}) {
    const double expected = std::pow(n, 1.5) / (4 * pi);
    ModeLattice(n).for_each([&](Wavevector k) {
      if (!k.is_zero()) EXPECT_NEAR(renormalized_basis_norm(k, n), expected, 1e-12);
    });
  }
  EXPECT_NEAR(renormalized_basis_norm({2, 3}, 25) / renormalized_basis_norm({1, 1}, 5),
              std::pow(5.0, 1.5), 1e-12);
}

}  // namespace
}  // namespace zeitlin
