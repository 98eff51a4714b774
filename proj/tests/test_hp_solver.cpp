#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ohpade/catalog.hpp"
#include "ohpade/errors.hpp"
#include "ohpade/hp_solver.hpp"
#include "oracles.hpp"

using namespace ohpade;
using F = AnalyticFunction;

namespace {

std::shared_ptr<const OrthoBasis> basis(const MeasureSpec& m, int n = 40) {
  return std::make_shared<const OrthoBasis>(OrthoBasis::build(m, n));
}

}  // namespace

TEST(MultiIndex, ParseAndValidate) {
  const MultiIndex m = MultiIndex::parse("2,1");
  EXPECT_EQ(m.m, (std::vector<int>{2, 1}));
  EXPECT_EQ(m.total(), 3);
  EXPECT_EQ(m.max(), 2);
  EXPECT_EQ(m.describe(), "2,1");
  EXPECT_THROW(MultiIndex::parse("2,x"), ParameterError);
  EXPECT_THROW((MultiIndex{{1, 0}}).validate(), ParameterError);
  EXPECT_THROW((MultiIndex{{}}).validate(), ParameterError);
}

TEST(HpSolver, SinglePoleOnCircle) {
  SystemTables t(basis(MeasureSpec::circle()), {{F::pole(2.0)}, {{1}}});
  t.ensure(3);
  const AssembledSystem sys = assemble_system(t, 3);
  ASSERT_EQ(sys.matrix.rows(), 1);
  ASSERT_EQ(sys.matrix.cols(), 2);
  EXPECT_NEAR(std::abs(sys.matrix(0, 0) + 1.0 / 16.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(sys.matrix(0, 1) + 1.0 / 8.0), 0.0, 1e-15);

  const DenominatorResult q = solve_denominator(sys.matrix);
  EXPECT_TRUE(q.unique);
  EXPECT_FALSE(q.degree_deficient);
  EXPECT_NEAR(std::abs(q.q[0] + 2.0), 0.0, 1e-14);
  EXPECT_EQ(q.q[1], Complex(1.0));

  // QF ≡ 1, so the numerator is the constant 1.
  const ApproximantSet a = solve_approximant(t, 3);
  EXPECT_NEAR(std::abs(a.numerators[0][0][0] - 1.0), 0.0, 1e-13);
  for (int beta = 1; beta < 3; ++beta) EXPECT_LT(std::abs(a.numerators[0][0][beta]), 1e-13);
}

TEST(HpSolver, DegenerateInputs) {
  Eigen::MatrixXcd two(2, 3);
  two << 1.0, 2.0, 3.0, 1.0, 2.0, 3.0;
  const DenominatorResult q = solve_denominator(two);
  EXPECT_FALSE(q.unique);
  EXPECT_GE(q.nullspace_dim, 2);
  EXPECT_THROW(solve_denominator(Eigen::MatrixXcd::Zero(2, 3)), DegenerateSystemError);

  SystemTables t(basis(MeasureSpec::circle()), catalog_entry("dup_pair").system);
  t.ensure(12);
  const AssembledSystem sys = assemble_system(t, 12);
  EXPECT_EQ(sys.matrix.row(0), sys.matrix.row(1));
  for (int n = 1; n <= 30; ++n) EXPECT_FALSE(solve_approximant(t, n).denominator.unique) << n;
}

TEST(HpSolver, DimensionsAndPreconditions) {
  const auto& e = catalog_entry("rational_m4");
  SystemTables t(basis(e.measure), e.system);
  t.ensure(10);
  const AssembledSystem sys = assemble_system(t, 10);
  EXPECT_EQ(sys.matrix.rows(), 4);
  EXPECT_EQ(sys.matrix.cols(), 5);
  EXPECT_THROW(assemble_system(t, 11), ParameterError);
  EXPECT_THROW(solve_approximant(t, 1), ParameterError);
}

TEST(HpSolver, DefinitionResidualOnCatalog) {
  for (const char* id : {"circle_theta06", "interval_d2", "d2_distinct", "d2_shared",
                         "rational_exact", "interval_theta_legendre"}) {
    const auto& e = catalog_entry(id);
    auto b = basis(e.measure);
    SystemTables t(b, e.system);
    for (int n : {e.system.multi_index.max(), 8, 17, 30}) {
      const ApproximantSet a = solve_approximant(t, n);
      EXPECT_LE(definition_residual(*b, e.system, a), 1e-9) << id << " n=" << n;
    }
  }
}

TEST(HpSolver, IdentityDenominatorGivesFourierSection) {
  // With Q = 1 the numerator is the truncated expansion of z^k F.
  const F f = F::pole(1.5) + F::log(3.0);
  auto b = basis(MeasureSpec::chebyshev());
  SystemTables t(b, {{f}, {{1}}});
  t.ensure(12);
  DenominatorResult one;
  one.q = {1.0, 0.0};
  one.degree = 0;
  const ApproximantSet a = numerators(t, one, 12);
  for (int beta = 0; beta < 12; ++beta) {
    EXPECT_LT(std::abs(a.numerators[0][0][beta] - t.table(0).at(0, beta)), 1e-15);
  }
}

TEST(HpSolver, ClassicalOracleAgreesOnCircle) {
  EXPECT_NEAR(std::abs(classical_hp_oracle({F::pole(2.0).taylor(10)}, 5, MultiIndex{{1}}).q[0] + 2.0),
              0.0, 1e-14);
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> radius(1.2, 3.0), angle(0.0, 2.0 * M_PI);
  auto b = basis(MeasureSpec::circle(), 30);
  for (int trial = 0; trial < 6; ++trial) {
    std::vector<F> fs;
    MultiIndex m;
    for (int i = 0; i < 2; ++i) {
      const int mi = 1 + (trial + i) % 2;
      F f = F::pole(std::polar(radius(rng), angle(rng)));
      for (int j = 1; j < mi; ++j) f = f + F::pole(std::polar(radius(rng), angle(rng)));
      fs.push_back(f);
      m.m.push_back(mi);
    }
    const FunctionSystem sys{fs, m};
    SystemTables t(b, sys);
    std::vector<std::vector<Complex>> taylor;
    for (const auto& f : fs) taylor.push_back(f.taylor(31));
    for (int n = m.max(); n <= 30; ++n) {
      const ApproximantSet a = solve_approximant(t, n);
      const ClassicalResult c = classical_hp_oracle(taylor, n, m);
      // orthogonal coefficients of far poles carry absolute, not relative,
      // error, so compare relative to the size of q
      double scale = 0.0;
      for (const Complex v : c.q) scale = std::max(scale, std::abs(v));
      if (n > m.total() + 1) EXPECT_LT(coeff_distance(a.denominator.q, c.q), 1e-9 * scale) << trial << " n=" << n;
      EXPECT_EQ(a.denominator.unique, c.unique);
    }
  }
}

TEST(HpSolver, PolynomialInputIsNonUniqueForBoth) {
  const F p = F::polynomial({1.0, 2.0, 0.5});
  auto b = basis(MeasureSpec::circle(), 20);
  SystemTables t(b, {{p}, {{1}}});
  const ClassicalResult c = classical_hp_oracle({p.taylor(21)}, 6, MultiIndex{{1}});
  // Every row is zero once n exceeds the degree: the solver sees a degenerate system.
  EXPECT_THROW(solve_approximant(t, 6), DegenerateSystemError);
  EXPECT_FALSE(c.unique);
}

TEST(HpSolver, ScaleInvariance) {
  const auto& e = catalog_entry("interval_d2");
  auto b = basis(e.measure);
  SystemTables t(b, e.system);
  FunctionSystem scaled = e.system;
  scaled.functions[0] = scaled.functions[0].scaled(Complex(0.0, 3.0));
  scaled.functions[1] = scaled.functions[1].scaled(-0.25);
  SystemTables ts(b, scaled);
  for (int n = 4; n <= 30; n += 2) {
    EXPECT_LT(coeff_distance(solve_approximant(t, n).denominator.q,
                             solve_approximant(ts, n).denominator.q),
              1e-11);
  }
}

TEST(HpSolver, ExactRecovery) {
  for (const char* id : {"rational_exact", "rational_m4"}) {
    const auto& e = catalog_entry(id);
    SystemTables t(basis(e.measure), e.system);
    const Poly target = e.truth->q_mf();
    for (int n = *e.exact_from; n <= 40; ++n) {
      const ApproximantSet a = solve_approximant(t, n);
      EXPECT_LE(coeff_distance(a.denominator.q, target), 1e-8) << id << " n=" << n;
      EXPECT_TRUE(a.denominator.unique);
    }
  }
}

TEST(HpSolver, DegreeDeficientMonicRepresentative) {
  // Nullspace spanned by e_0 and e_1: the top coefficient is zero in every
  // element, so the degree steps down.
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(1, 3);
  m(0, 2) = 1.0;
  const DenominatorResult q = solve_denominator(m);
  EXPECT_TRUE(q.degree_deficient);
  EXPECT_EQ(q.degree, 1);
  EXPECT_EQ(q.q[1], Complex(1.0));
  EXPECT_LT(std::abs(q.q[2]), 1e-15);
}

TEST(HpSolver, ApproximantConvergesOffPoles) {
  const auto& e = catalog_entry("circle_theta06");
  auto b = basis(e.measure);
  SystemTables t(b, e.system);
  const ApproximantSet a = solve_approximant(t, 30);
  for (const Complex z : {Complex(0.0), Complex(0.3, 0.0), Complex(0.0, 0.3)}) {
    EXPECT_LT(std::abs(eval_approximant(*b, a, 0, z) - e.system.functions[0](z)), 1e-8);
  }
}
