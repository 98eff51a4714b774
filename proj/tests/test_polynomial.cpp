#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ohpade/polynomial.hpp"
#include "oracles.hpp"

using namespace ohpade;

TEST(Roots, SmallCases) {
  auto r = root_list(Poly{-2.0, 1.0});
  ASSERT_EQ(r.size(), 1u);
  EXPECT_NEAR(std::abs(r[0] - 2.0), 0.0, 1e-15);
  r = root_list(Poly{2.0, -3.0, 1.0});
  ASSERT_EQ(r.size(), 2u);
  EXPECT_NEAR(r[0].real(), 1.0, 1e-14);
  EXPECT_NEAR(r[1].real(), 2.0, 1e-14);
  EXPECT_TRUE(roots(Poly{3.0}).empty());
}

TEST(Roots, MultiplyBackRandomPolynomials) {
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> radius(1.1, 5.0), angle(0.0, 2.0 * M_PI);
  for (int trial = 0; trial < 200; ++trial) {
    const int degree = 1 + trial % 6;
    std::vector<Complex> zeros;
    for (int j = 0; j < degree; ++j) zeros.push_back(std::polar(radius(rng), angle(rng)));
    const auto p = oracle::expand(zeros);
    const auto found = root_list(p);
    ASSERT_EQ(found.size(), zeros.size());
    const auto back = oracle::expand(found);
    for (std::size_t j = 0; j < p.size(); ++j) EXPECT_LT(std::abs(back[j] - p[j]), 1e-9);
  }
}

TEST(Roots, ClusteringAndOrdering) {
  const auto p = oracle::expand({Complex(1.5, 0.0), Complex(1.5, 0.0), Complex(-2.0, 1.0)});
  const auto r = roots(p, 1e-6);
  ASSERT_EQ(r.size(), 2u);
  EXPECT_EQ(r[0].multiplicity, 1);
  EXPECT_NEAR(std::abs(r[0].z - Complex(-2.0, 1.0)), 0.0, 1e-12);
  EXPECT_EQ(r[1].multiplicity, 2);
  EXPECT_NEAR(std::abs(r[1].z - 1.5), 0.0, 1e-6);
  // Zero roots are peeled exactly.
  const auto z = roots(Poly{0.0, 0.0, -1.0, 1.0});
  ASSERT_EQ(z.size(), 2u);
  EXPECT_EQ(z[0].z, Complex(0.0));
  EXPECT_EQ(z[0].multiplicity, 2);
}

TEST(Polynomial, Helpers) {
  const Poly p = poly_from_roots(std::vector<Complex>{1.0, 2.0});
  EXPECT_EQ(p, (Poly{2.0, -3.0, 1.0}));
  EXPECT_EQ(poly_eval(p, 3.0), Complex(2.0));
  EXPECT_EQ(poly_mul(Poly{1.0, 1.0}, Poly{-1.0, 1.0}), (Poly{-1.0, 0.0, 1.0}));
  EXPECT_EQ(poly_degree(Poly{1.0, 2.0, 1e-20}, 1e-15), 1);
  EXPECT_DOUBLE_EQ(coeff_distance(Poly{1.0, 2.0}, Poly{1.0, 2.5, 0.25}), 0.5);
}

TEST(Polynomial, MatchDistancesIsOptimal) {
  const std::vector<Complex> targets{0.0, 1.0};
  const std::vector<Complex> cands{1.1, 0.05, 10.0};
  const auto d = match_distances(targets, cands);
  EXPECT_NEAR(d[0], 0.05, 1e-15);
  EXPECT_NEAR(d[1], 0.1, 1e-15);
  // Nearest-first for target 0 would take 0.4 and strand 0.45.
  const auto e = match_distances(std::vector<Complex>{0.0, 0.45},
                                 std::vector<Complex>{0.4, 5.0, -0.3});
  EXPECT_NEAR(e[0], 0.3, 1e-15);
  EXPECT_NEAR(e[1], 0.05, 1e-15);
  EXPECT_TRUE(std::isinf(match_distances(targets, std::vector<Complex>{0.0})[1]));
}
