#include <gtest/gtest.h>

#include <cmath>

#include "ohpade/domain.hpp"
#include "ohpade/errors.hpp"
#include "oracles.hpp"

using namespace ohpade;

TEST(ConformalMap, DiskIsIdentityOutside) {
  const ConformalMap map(Domain::unit_disk());
  EXPECT_EQ(map.phi(1.5), Complex(1.5));
  EXPECT_THROW(map.phi(Complex(0.3, 0.2)), DomainError);
  EXPECT_DOUBLE_EQ(map.modulus(0.3), 1.0);
}

TEST(ConformalMap, IntervalValuesAgreeWithJoukowskiOracle) {
  const ConformalMap map(Domain::interval());
  EXPECT_NEAR(map.phi(2.0).real(), 2.0 + std::sqrt(3.0), 1e-14);
  EXPECT_NEAR(map.phi(-2.0).real(), -(2.0 + std::sqrt(3.0)), 1e-14);
  for (const Complex w : {Complex(1.5, 0.0), Complex(0.3, 2.0), Complex(-4.0, -1.0),
                          Complex(0.0, -1.2), Complex(-1.05, 0.01)}) {
    EXPECT_LT(std::abs(map.phi(oracle::joukowski(w)) - w), 1e-12) << w;
  }
}

TEST(ConformalMap, ModulusExceedsOneOutsideAndGrows) {
  for (const Domain d : {Domain::unit_disk(), Domain::interval(), Domain::interval(-0.5, 2.0)}) {
    const ConformalMap map(d);
    for (double r : {1.01, 1.5, 3.0}) {
      for (int k = 0; k < 16; ++k) {
        const Complex w = std::polar(r, 0.3 + 2.0 * M_PI * k / 16.0);
        const Complex z = map.inverse(w);
        EXPECT_GT(map.modulus(z), 1.0);
        EXPECT_LT(std::abs(map.phi(z) - w), 1e-10);
      }
    }
    // Φ(z)/z → Φ'(∞) = 1/cap(E) > 0.
    const Complex big = 1e7;
    EXPECT_NEAR((map.phi(big) / big).real(), 1.0 / d.capacity(), 1e-6);
  }
}

TEST(ConformalMap, LevelCurves) {
  const ConformalMap disk(Domain::unit_disk());
  const auto pts = disk.level_curve(2.0, 4);
  ASSERT_EQ(pts.size(), 4u);
  const Complex expected[] = {{2, 0}, {0, 2}, {-2, 0}, {0, -2}};
  for (int j = 0; j < 4; ++j) EXPECT_LT(std::abs(pts[j] - expected[j]), 1e-15);

  const ConformalMap seg(Domain::interval());
  const double rho = 2.0;
  const double a = 0.5 * (rho + 1.0 / rho), b = 0.5 * (rho - 1.0 / rho);
  for (const Complex z : seg.level_curve(rho, 37)) {
    EXPECT_NEAR(std::abs(seg.phi(z)), rho, 1e-12);
    EXPECT_NEAR(z.real() * z.real() / (a * a) + z.imag() * z.imag() / (b * b), 1.0, 1e-10);
  }
  EXPECT_THROW(seg.level_curve(1.0, 8), ParameterError);
  EXPECT_THROW(seg.level_curve(0.5, 8), ParameterError);
}

TEST(ConformalMap, CanonicalDomains) {
  const ConformalMap disk(Domain::unit_disk());
  EXPECT_TRUE(disk.in_canonical_domain(0.5, 1.5));
  EXPECT_FALSE(disk.in_canonical_domain(2.0, 1.5));
  const ConformalMap seg(Domain::interval());
  EXPECT_TRUE(seg.in_canonical_domain(2.0, 4.0));
  EXPECT_TRUE(seg.in_canonical_domain(0.25, 1.01));
  // Nestedness of D_ρ.
  for (const Complex z : {Complex(1.8, 0.4), Complex(-0.2, 1.1), Complex(3.0, -2.0)}) {
    for (double r1 : {1.2, 2.0, 3.5}) {
      for (double r2 : {r1 + 0.1, r1 + 1.0}) {
        if (seg.in_canonical_domain(z, r1)) EXPECT_TRUE(seg.in_canonical_domain(z, r2));
        if (disk.in_canonical_domain(z, r1)) EXPECT_TRUE(disk.in_canonical_domain(z, r2));
      }
    }
  }
}

TEST(Domain, NormsAndValidation) {
  EXPECT_DOUBLE_EQ(Domain::unit_disk().sup_norm(), 1.0);
  EXPECT_DOUBLE_EQ(Domain::interval(-0.5, 2.0).sup_norm(), 2.0);
  EXPECT_DOUBLE_EQ(Domain::interval().capacity(), 0.5);
  EXPECT_TRUE(Domain::interval().contains(0.3));
  EXPECT_FALSE(Domain::interval().contains(Complex(0.3, 0.1)));
  EXPECT_THROW(Domain::interval(1.0, -1.0), ParameterError);
}
