#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ohpade/errors.hpp"
#include "ohpade/fit.hpp"

using namespace ohpade;

TEST(Fit, LinearExact) {
  const std::vector<double> x{0, 1, 2, 3}, y{1, 3, 5, 7};
  const LinearFit f = linear_fit(x, y);
  EXPECT_NEAR(f.slope, 2.0, 1e-15);
  EXPECT_NEAR(f.intercept, 1.0, 1e-15);
  EXPECT_NEAR(f.rms, 0.0, 1e-15);
  EXPECT_THROW(linear_fit(std::vector<double>{1, 1}, std::vector<double>{0, 1}), Error);
}

TEST(Fit, GeometricRecoversRate) {
  std::vector<int> n;
  std::vector<double> v;
  for (int k = 5; k <= 60; ++k) {
    n.push_back(k);
    v.push_back(3.0 * std::pow(0.6, k));
  }
  const GeometricFit g = geometric_fit(n, v, 1e-12, 1e-2, 8);
  EXPECT_NEAR(g.rate, 0.6, 1e-12);
  for (int k : g.used) {
    EXPECT_GE(3.0 * std::pow(0.6, k), 1e-12);
    EXPECT_LE(3.0 * std::pow(0.6, k), 1e-2);
  }
  EXPECT_THROW(geometric_fit(n, v, 1e-4, 1e-2, 20), InsufficientDataError);
}
