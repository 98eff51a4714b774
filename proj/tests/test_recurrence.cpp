#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ohpade/recurrence.hpp"
#include "oracles.hpp"

using namespace ohpade;

TEST(Recurrence, GaussLegendreTwoPoints) {
  const auto rec = jacobi_recurrence<double>(0.0, 0.0, 8);
  const auto g = gauss_rule(rec, 2);
  EXPECT_NEAR(g.nodes[0], -1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(g.nodes[1], 1.0 / std::sqrt(3.0), 1e-15);
  EXPECT_NEAR(g.weights[0], 0.5, 1e-15);
}

TEST(Recurrence, GaussRulesReproduceMoments) {
  struct Case {
    double alpha, beta;
    std::vector<long double> mu;
  };
  const Case cases[] = {{0.0, 0.0, oracle::legendre_moments(40)},
                        {-0.5, -0.5, oracle::chebyshev_moments(40)}};
  for (const auto& c : cases) {
    const auto rec = jacobi_recurrence<double>(c.alpha, c.beta, 40);
    const auto g = gauss_rule(rec, 18);
    for (int k = 0; k < 36; ++k) {
      double s = 0.0;
      for (std::size_t j = 0; j < g.nodes.size(); ++j) s += g.weights[j] * std::pow(g.nodes[j], k);
      EXPECT_NEAR(s, static_cast<double>(c.mu[k]), 1e-14) << "k = " << k;
    }
  }
}

TEST(Recurrence, StieltjesRecoversJacobiCoefficients) {
  const auto rec = jacobi_recurrence<double>(0.3, -0.4, 80);
  const auto g = gauss_rule(rec, 60);
  const auto st = stieltjes_recurrence<double>(g.nodes, g.weights, 20);
  for (int n = 0; n < 20; ++n) {
    EXPECT_NEAR(st.a[n], rec.a[n], 1e-12);
    EXPECT_NEAR(st.b[n], rec.b[n], 1e-12);
  }
}

TEST(Recurrence, LongDoubleAgreesWithDouble) {
  const auto rd = jacobi_recurrence<double>(0.0, 0.0, 30);
  const auto rl = jacobi_recurrence<long double>(0.0L, 0.0L, 30);
  std::vector<double> pd(30);
  std::vector<long double> pl(30);
  orthonormal_values<double, double>(rd, 0.37, pd);
  orthonormal_values<long double, long double>(rl, 0.37L, pl);
  for (int n = 0; n < 30; ++n) EXPECT_NEAR(pd[n], static_cast<double>(pl[n]), 1e-13);
}

TEST(Recurrence, RejectsBadExponents) {
  EXPECT_THROW(jacobi_recurrence<double>(-1.0, 0.0, 4), std::invalid_argument);
}
