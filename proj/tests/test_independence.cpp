#include <gtest/gtest.h>

#include "ohpade/catalog.hpp"
#include "ohpade/errors.hpp"
#include "ohpade/independence.hpp"

using namespace ohpade;
using F = AnalyticFunction;

TEST(Independence, ReferenceCases) {
  EXPECT_TRUE(poly_independence_check({{F::pole(2.0), F::pole(3.0)}, {{1, 1}}}));
  EXPECT_FALSE(poly_independence_check({{F::pole(2.0), F::pole(2.0)}, {{1, 1}}}));
  // z/(z - 2) = 1 + 2/(z - 2): the combination -2 F1 + F2 is the polynomial 1.
  EXPECT_FALSE(poly_independence_check({{F::pole(2.0), F::monomial(1) * F::pole(2.0)}, {{1, 1}}}));
}

TEST(Independence, DegreeOfMultipliersMatters) {
  // One pole cannot support a degree-one multiplier.
  EXPECT_TRUE(poly_independence_check({{F::pole(2.0)}, {{1}}}));
  EXPECT_FALSE(poly_independence_check({{F::pole(2.0)}, {{2}}}));
  EXPECT_TRUE(poly_independence_check({{F::pole(2.0, 2)}, {{2}}}));
  const IndependenceReport r = poly_independence({{F::pole(2.0) + F::pole(-3.0)}, {{3}}});
  EXPECT_FALSE(r.independent);
  EXPECT_EQ(r.unknowns, 3);
  EXPECT_EQ(r.rank, 2);
}

TEST(Independence, ProductsAndPowers) {
  // 1/((z-2)(z-3)) has two simple poles.
  EXPECT_TRUE(poly_independence_check({{F::pole(2.0) * F::pole(3.0)}, {{2}}}));
  // (2 - z)^{-2} is a double pole.
  EXPECT_TRUE(poly_independence_check({{F::power(2.0, -2.0)}, {{2}}}));
}

TEST(Independence, CatalogExpectations) {
  for (const auto& e : catalog()) {
    if (!e.expect_independent) continue;
    EXPECT_EQ(poly_independence_check(e.system), *e.expect_independent) << e.id;
  }
}

TEST(Independence, RejectsTranscendentalInput) {
  EXPECT_THROW(poly_independence_check({{F::log(3.0)}, {{1}}}), UnsupportedInputError);
  EXPECT_THROW(poly_independence_check({{F::exp()}, {{1}}}), UnsupportedInputError);
  EXPECT_THROW(poly_independence_check({{F::power(3.0, 0.5)}, {{1}}}), UnsupportedInputError);
}
