#include <gtest/gtest.h>

#include <cmath>
#include <memory>

#include "ohpade/coefficients.hpp"
#include "ohpade/errors.hpp"
#include "oracles.hpp"

using namespace ohpade;
using F = AnalyticFunction;

namespace {

std::shared_ptr<const OrthoBasis> basis(const MeasureSpec& m, int n = 40) {
  return std::make_shared<const OrthoBasis>(OrthoBasis::build(m, n));
}

}  // namespace

TEST(Coefficients, CircleGeometricSeries) {
  auto b = basis(MeasureSpec::circle());
  const F g = F::pole(2.0);
  EXPECT_NEAR(coeff_quadrature(*b, g, 0, 3).real(), -1.0 / 16.0, 1e-15);
  EXPECT_NEAR(coeff_quadrature(*b, g, 1, 3).real(), -1.0 / 8.0, 1e-15);
  EXPECT_NEAR(std::abs(coeff_contour(*b, g, 3, 1.5) + 1.0 / 16.0), 0.0, 1e-10);
  CoeffTable t(b, g);
  t.ensure(3, 40);
  for (int k = 0; k <= 3; ++k) {
    for (int n = 0; n <= 40; ++n) {
      const Complex expected = n >= k ? oracle::pole_taylor(2.0, n - k) : Complex(0.0);
      EXPECT_LT(std::abs(t.at(k, n) - expected), 1e-12 * std::pow(2.0, -n) + 1e-18) << k << " " << n;
    }
  }
}

TEST(Coefficients, BasisPolynomialGivesKroneckerDelta) {
  auto b = basis(MeasureSpec::chebyshev(), 10);
  // p_4 = √2 T_4 = √2 (8x⁴ - 8x² + 1).
  const double r2 = std::sqrt(2.0);
  const F p4 = F::polynomial({r2, 0.0, -8.0 * r2, 0.0, 8.0 * r2});
  for (int n = 0; n <= 10; ++n) {
    EXPECT_NEAR(std::abs(coeff_quadrature(*b, p4, 0, n) - (n == 4 ? 1.0 : 0.0)), 0.0, 1e-13);
  }
  // Orthogonality to lower degrees through the contour formula.
  for (int n = 5; n <= 10; ++n) EXPECT_LT(std::abs(coeff_contour(*b, p4, n, 2.0)), 1e-10);
}

TEST(Coefficients, CrossMethodAgreement) {
  const F functions[] = {F::pole(2.0), F::pole(1.2) + F::pole(2.0), F::log(3.0),
                         F::exp(), F::pole(Complex(0.0, 1.4)) + F::log(4.0)};
  for (const auto& m : {MeasureSpec::circle(), MeasureSpec::chebyshev(), MeasureSpec::legendre()}) {
    auto b = basis(m);
    for (const F& f : functions) {
      CoeffTable q(b, f, CoeffMethod::quadrature);
      CoeffTable c(b, f, CoeffMethod::contour);
      q.ensure(2, 40);
      c.ensure(2, 40);
      for (int k = 0; k <= 2; ++k) {
        for (int n = 0; n <= 40; ++n) EXPECT_LT(std::abs(q.at(k, n) - c.at(k, n)), 1e-9);
      }
    }
  }
  auto cheb = basis(MeasureSpec::chebyshev());
  EXPECT_LT(std::abs(coeff_contour(*cheb, F::pole(2.0), 5, 2.0) -
                     coeff_quadrature(*cheb, F::pole(2.0), 0, 5)),
            1e-9);
}

TEST(Coefficients, LinearityAndShiftConsistency) {
  auto b = basis(MeasureSpec::legendre());
  const F g = F::pole(1.7);
  const F h = F::log(2.5);
  const Complex alpha(0.5, -1.0), beta(2.0, 0.25);
  const F combo = g.scaled(alpha) + h.scaled(beta);
  for (int n = 0; n <= 30; n += 3) {
    const double rho = default_contour_rho(*b, combo, n);
    const Complex lhs = coeff_contour(*b, combo, n, rho);
    const Complex rhs = alpha * coeff_contour(*b, g, n, rho) + beta * coeff_contour(*b, h, n, rho);
    EXPECT_LT(std::abs(lhs - rhs), 1e-12);
    const auto shifts = coeff_contour_shifts(*b, g, n, 3, rho);
    EXPECT_LT(std::abs(shifts[3].value - coeff_contour(*b, g.times_z_power(3), n, rho)), 1e-12);
  }
}

TEST(Coefficients, ContourRejectsSingularityInside) {
  auto b = basis(MeasureSpec::circle());
  EXPECT_THROW(coeff_contour(*b, F::pole(1.4), 4, 1.5), ParameterError);
}

TEST(Coefficients, DecayLawMatchesNearestSingularity) {
  struct Case {
    MeasureSpec m;
    F f;
    double rho0;
  };
  const Case cases[] = {
      {MeasureSpec::circle(), F::pole(2.0), 2.0},
      {MeasureSpec::chebyshev(), F::pole(2.0), 2.0 + std::sqrt(3.0)},
      {MeasureSpec::legendre(), F::pole(Complex(0.0, 1.0)), 1.0 + std::sqrt(2.0)},
      {MeasureSpec::circle(), F::pole(1.25) + F::log(3.0), 1.25},
  };
  for (const auto& c : cases) {
    CoeffTable t(basis(c.m, 60), c.f);
    t.ensure(0, 60);
    const RadiusEstimate est = radius_from_coeffs(t.row(0), 10, 60, 1e-290);
    EXPECT_NEAR(est.rho0 / c.rho0, 1.0, 0.05) << c.f.describe();
  }
}

TEST(Coefficients, RadiusEdgeCases) {
  auto b = basis(MeasureSpec::chebyshev());
  CoeffTable poly(b, F::polynomial({1.0, 2.0, 3.0}));
  poly.ensure(0, 30);
  EXPECT_TRUE(radius_from_coeffs(poly.row(0), 5, 30).infinite);
  const std::vector<Complex> few{1.0, 0.5, 0.25, 0.125};
  EXPECT_THROW(radius_from_coeffs(few, 0, 3), InsufficientDataError);
}

TEST(Coefficients, IncrementalTableMatchesFresh) {
  auto b = basis(MeasureSpec::chebyshev());
  const F f = F::pole(1.5) + F::pole(3.0);
  CoeffTable grown(b, f);
  grown.ensure(0, 10);
  grown.ensure(2, 25);
  CoeffTable fresh(b, f);
  fresh.ensure(2, 25);
  for (int k = 0; k <= 2; ++k) {
    for (int n = 0; n <= 25; ++n) EXPECT_EQ(grown.at(k, n), fresh.at(k, n));
  }
  EXPECT_FALSE(grown.covers(3, 0));
  EXPECT_THROW(grown.at(3, 0), ParameterError);
}
