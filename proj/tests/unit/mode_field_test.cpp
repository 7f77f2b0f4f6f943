#include <gtest/gtest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "zeitlin/initial_conditions.hpp"
#include "zeitlin/mode_field.hpp"

namespace zeitlin {
namespace {

using testing::random_complex_field;
using testing::random_real_field;

TEST(InverseLaplacian, Examples) {
  const ModeLattice lat(5);
  ModeField w(lat);
  w[wv(1, 0)] = 1.0;
  w[wv(-1, 0)] = 1.0;
  w[wv(1, 1)] = 2.0;
  w[wv(-1, -1)] = 2.0;
  const ModeField psi = inverse_laplacian(w);
  EXPECT_EQ(psi[wv(1, 0)], Complex(-1.0));
  EXPECT_EQ(psi[wv(-1, 0)], Complex(-1.0));
  EXPECT_EQ(psi[wv(1, 1)], Complex(-1.0));
  EXPECT_EQ(psi[wv(-1, -1)], Complex(-1.0));
  EXPECT_EQ(psi[wv(0, 1)], Complex(0.0));
  EXPECT_EQ(inverse_laplacian(ModeField(lat)), ModeField(lat));
}

TEST(InverseLaplacian, OriginStaysZero) {
  ModeField w = random_complex_field(7, 3);
  w[wv(0, 0)] = 5.0;
  EXPECT_EQ(inverse_laplacian(w)[wv(0, 0)], Complex(0.0));
}

TEST(RealityResidual, Examples) {
  const ModeField sym = random_real_field(7, 11);
  EXPECT_EQ(reality_residual(sym), 0.0);

  ModeField f(ModeLattice(5));
  f[wv(1, 0)] = 1.0;
  f[wv(-1, 0)] = {1.0, 1.0};
  EXPECT_DOUBLE_EQ(reality_residual(f), 1.0);

  EXPECT_EQ(reality_residual(enforce_reality(random_complex_field(9, 4))), 0.0);
}

TEST(EnforceReality, AveragesPairsAndPinsOrigin) {
  ModeField f = random_complex_field(5, 8);
  f[wv(0, 0)] = {2.0, 3.0};
  const ModeField g = enforce_reality(f);
  EXPECT_EQ(g[wv(0, 0)], Complex(0.0));
  const Complex expected = 0.5 * (f[wv(1, 2)] + std::conj(f[wv(-1, -2)]));
  EXPECT_NEAR(std::abs(g[wv(1, 2)] - expected), 0.0, 1e-15);
  EXPECT_EQ(g[wv(-1, -2)], std::conj(g[wv(1, 2)]));
}

TEST(Norms, SmallField) {
  ModeField f(ModeLattice(5));
  f[wv(1, 0)] = 3.0;
  f[wv(-1, 0)] = 3.0;
  f[wv(1, 1)] = {0.0, 4.0};
  f[wv(-1, -1)] = {0.0, -4.0};
  EXPECT_DOUBLE_EQ(enstrophy(f), 9 + 9 + 16 + 16);
  EXPECT_DOUBLE_EQ(energy(f), 0.5 * (9 + 9 + 16.0 / 2 + 16.0 / 2));
  EXPECT_DOUBLE_EQ(l2_norm(f), std::sqrt(50.0));
  EXPECT_DOUBLE_EQ(max_abs(f), 4.0);
  EXPECT_DOUBLE_EQ(sobolev_norm2(f, 1.0), 9 * 2 + 9 * 2 + 16 * 3 + 16 * 3);
  EXPECT_DOUBLE_EQ(sobolev_norm2(f, 0.0), enstrophy(f));
}

TEST(Arithmetic, LinearCombinations) {
  const ModeField a = random_complex_field(5, 1);
  const ModeField b = random_complex_field(5, 2);
  ModeField c = a;
  c.add_scaled(2.0, b);
  const ModeField d = a + Complex(2.0) * b;
  EXPECT_LT(testing::max_mode_difference(c, d), 1e-15);
  EXPECT_LT(testing::max_mode_difference(a + b - b, a), 1e-15);
}

TEST(AllFinite, DetectsNan) {
  ModeField f = random_real_field(5, 1);
  EXPECT_TRUE(all_finite(f));
  f[wv(2, 2)] = {std::nan(""), 0.0};
  EXPECT_FALSE(all_finite(f));
}

TEST(EmbedTruncate, RoundTripIsIdentity) {
  const ModeField small = random_real_field(7, 21);
  const ModeLattice big(15);
  const ModeField up = embed(small, big);
  EXPECT_EQ(up[wv(7, 7)], Complex(0.0));
  EXPECT_EQ(up[wv(3, -3)], small[wv(3, -3)]);
  EXPECT_EQ(truncate(up, ModeLattice(7)), small);
  EXPECT_DOUBLE_EQ(enstrophy(up), enstrophy(small));
}

TEST(EmbedTruncate, TruncateDropsOuterModes) {
  const ModeField big = random_real_field(9, 5);
  const ModeField small = truncate(big, ModeLattice(5));
  ModeLattice(5).for_each([&](Wavevector k) { EXPECT_EQ(small[k], big[k]); });
  EXPECT_LT(enstrophy(small), enstrophy(big));
  EXPECT_THROW(embed(big, ModeLattice(5)), std::invalid_argument);
}

}  // namespace
}  // namespace zeitlin
