#include <gtest/gtest.h>

#include <cmath>

#include "ohpade/catalog.hpp"
#include "ohpade/errors.hpp"
#include "ohpade/incomplete.hpp"

using namespace ohpade;
using F = AnalyticFunction;

namespace {

std::shared_ptr<const OrthoBasis> circle(int n = 40) {
  return std::make_shared<const OrthoBasis>(OrthoBasis::build(MeasureSpec::circle(), n));
}

double nearest(const DenominatorResult& q, Complex target) {
  double best = INFINITY;
  for (const Complex z : root_list(Poly(q.q.begin(), q.q.begin() + q.degree + 1))) {
    best = std::min(best, std::abs(z - target));
  }
  return best;
}

}  // namespace

TEST(Incomplete, ProblemValidation) {
  EXPECT_THROW((IncompleteSpec{F::pole(2.0), 1, 2, 10}).validate(), ParameterError);
  EXPECT_THROW((IncompleteSpec{F::pole(2.0), 2, 0, 10}).validate(), ParameterError);
  EXPECT_NO_THROW((IncompleteSpec{F::pole(2.0), 2, 1, 10}).validate());
}

TEST(Incomplete, CapturesSimplePole) {
  const DenominatorResult q = solve_incomplete(circle(), IncompleteSpec{F::pole(2.0), 2, 1, 20});
  EXPECT_LT(nearest(q, 2.0), 1e-6);
  EXPECT_GE(q.nullspace_dim, 2);
}

TEST(Incomplete, CoincidesWithSolverWhenComplete) {
  for (const auto& m : {MeasureSpec::circle(), MeasureSpec::chebyshev()}) {
    auto b = std::make_shared<const OrthoBasis>(OrthoBasis::build(m, 40));
    const F f = F::pole(1.5) + F::pole(-2.0) + F::log(4.0);
    SystemTables t(b, {{f}, {{2}}});
    CoeffTable table(b, f);
    for (int n = 2; n <= 30; n += 4) {
      const DenominatorResult inc = solve_incomplete(table, 2, 2, n);
      EXPECT_LT(coeff_distance(inc.q, solve_approximant(t, n).denominator.q), 1e-12) << n;
    }
  }
}

TEST(Incomplete, CaptureTraceDecays) {
  const auto& e = catalog_entry("incomplete_log");
  const CaptureTrace tr = pole_capture_trace(circle(30), e.system.functions[0], 2, 1, 10, 30);
  EXPECT_DOUBLE_EQ(tr.rho_m_star, 3.0);
  ASSERT_EQ(tr.poles.size(), 1u);
  ASSERT_TRUE(tr.fit.has_value());
  EXPECT_LE(tr.fit->rate, 0.55);
  EXPECT_LT(tr.steps.back().max_distance, 1e-4);
}

TEST(Incomplete, RationalCaptureIsExact) {
  const CaptureTrace tr = pole_capture_trace(circle(30), F::pole(1.4), 2, 1, 5, 30);
  double best = INFINITY;
  for (const auto& s : tr.steps) best = std::min(best, s.max_distance);
  EXPECT_LE(best, 1e-8);
}

TEST(Incomplete, NoPolesGivesEmptyTrace) {
  const CaptureTrace tr = pole_capture_trace(circle(30), F::exp(), 2, 1, 10, 30);
  EXPECT_TRUE(tr.poles.empty());
  EXPECT_TRUE(tr.steps.empty());
}

TEST(Incomplete, EntireFunctionZerosWander) {
  auto b = circle(30);
  const auto zeros_at = [&](int n) {
    const DenominatorResult q = solve_incomplete(b, IncompleteSpec{F::exp(), 1, 1, n});
    return root_list(Poly(q.q.begin(), q.q.begin() + q.degree + 1));
  };
  const auto z20 = zeros_at(20);
  const auto z30 = zeros_at(30);
  ASSERT_FALSE(z20.empty());
  const auto d = match_distances(z20, z30);
  for (double v : d) EXPECT_GT(v, 0.1);
}

TEST(Incomplete, FewerPolesThanConditionsTerminates) {
  // 1/(z - 1.4) has one pole; with q = z - 1.4 the stream [qF]_n vanishes.
  CoeffTable t(circle(40), F::pole(1.4));
  t.ensure(1, 40);
  for (int n = 2; n <= 40; ++n) {
    EXPECT_LT(std::abs(t.at(1, n) - 1.4 * t.at(0, n)), 1e-13);
  }
}
