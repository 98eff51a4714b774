#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "ohpade/errors.hpp"
#include "ohpade/experiment.hpp"
#include "ohpade/verify.hpp"

using namespace ohpade;
using F = AnalyticFunction;

TEST(Catalog, ListsRequiredEntries) {
  EXPECT_GE(catalog().size(), 8u);
  std::set<std::string> ids;
  for (const auto& e : catalog()) {
    EXPECT_TRUE(ids.insert(e.id).second) << "duplicate id " << e.id;
    EXPECT_FALSE(e.derivation.empty()) << e.id;
    EXPECT_NO_THROW(e.system.validate(e.measure.domain)) << e.id;
  }
  for (const char* id : {"rational_exact", "circle_theta06", "interval_theta", "d2_shared",
                         "d2_distinct", "poly_dependent", "entire_exp", "incomplete_log"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
  EXPECT_EQ(catalog_entry("dup_pair").expect_unique, false);
  EXPECT_NEAR(*catalog_entry("interval_theta").theta, 0.4492, 1e-4);
  EXPECT_THROW(catalog_entry("missing"), ParameterError);
}

TEST(Json, RoundTrips) {
  const F f = F::sum({F::pole(Complex(2.0, 0.5), 2, Complex(1.0, -1.0)), F::exp(0.5),
                      F::log(3.0, 2.0), F::power(Complex(0.0, 4.0), 0.5),
                      F::product({F::monomial(2, 3.0), F::pole(-2.0)})});
  const F back = function_from_json(Json::parse(to_json(f).dump()));
  for (const Complex z : {Complex(0.1, 0.2), Complex(-0.5, 0.3)}) {
    EXPECT_EQ(back(z), f(z));
  }
  const MeasureSpec m = measure_from_json(Json::parse(R"({"weight": "legendre",
      "domain": {"kind": "interval", "a": 0.0, "b": 2.0}, "quad_tol": 1e-12})"));
  EXPECT_EQ(m.weight, WeightKind::legendre);
  EXPECT_EQ(m.domain.b, 2.0);
  EXPECT_EQ(measure_from_json(to_json(m)).quad_tol, 1e-12);
  const auto& e = catalog_entry("d2_shared");
  const FunctionSystem s = system_from_json(to_json(e.system));
  EXPECT_EQ(s.multi_index, e.system.multi_index);
  const GroundTruth t = ground_truth_from_json(to_json(*e.truth));
  EXPECT_TRUE(std::isinf(t.rho_star[1][0]));
  EXPECT_EQ(t.poles[1].xi, Complex(0.0, 2.5));
}

TEST(Json, NestedFunctionDocument) {
  const F f = function_from_json(Json::parse(
      R"({"sum": [{"pole": {"a": [2.0, 0.0], "order": 1, "coeff": [1.0, 0.0]}},
                  {"exp": {"lambda": [1.0, 0.0]}}]})"));
  EXPECT_NEAR(std::abs(f(0.5) - (1.0 / (0.5 - 2.0) + std::exp(0.5))), 0.0, 1e-15);
}

TEST(Json, RejectsMalformedInput) {
  EXPECT_THROW(function_from_json(Json::parse(R"({"cosh": {}})")), ConfigError);
  EXPECT_THROW(function_from_json(Json::parse(R"({"pole": {}})")), ConfigError);
  EXPECT_THROW(complex_from_json(Json::parse(R"([1, 2, 3])")), ConfigError);
  EXPECT_THROW(measure_from_json(Json::parse(R"({"weight": "circle_lebesgue",
      "domain": {"kind": "interval"}})")),
               ConfigError);
  EXPECT_THROW(multi_index_from_json(Json::parse("[1, 0]")), ConfigError);
}

TEST(Json, DenominatorRecordFields) {
  DenominatorResult r;
  r.n = 7;
  r.q = {Complex(-2.0, 0.5), 1.0};
  r.singular_values = {0.3};
  r.unique = true;
  const Json j = to_json(r);
  for (const char* key : {"n", "q_coeffs", "singular_values", "unique", "degree_deficient"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j["q_coeffs"][0][1].get<double>(), 0.5);
}

TEST(Config, Validation) {
  const auto& e = catalog_entry("circle_theta06");
  EXPECT_THROW(ExperimentConfig::from_entry(e, 5, 12).validate(), ConfigError);
  EXPECT_NO_THROW(ExperimentConfig::from_entry(e, 5, 13).validate());
  EXPECT_THROW(ExperimentConfig::from_entry(catalog_entry("rational_m4"), 1, 20).validate(),
               ConfigError);
  EXPECT_THROW(config_from_json(Json::parse(R"({"entry": "circle_theta06", "n_range": [5, 30]})")),
               ConfigError);
  const ExperimentConfig c = config_from_json(Json::parse(
      R"({"version": 1, "label": "mine", "n_range": [2, 20], "measure": "chebyshev",
          "system": {"functions": [{"pole": {"a": 1.5}}], "m": "1"},
          "tolerances": {"rank_tol": 1e-9}, "outputs": {"formats": ["csv"]}})"));
  EXPECT_EQ(c.entry_id, "mine");
  EXPECT_EQ(c.measure.weight, WeightKind::chebyshev);
  EXPECT_EQ(c.options.rank_tol, 1e-9);
  EXPECT_EQ(c.formats, std::vector<std::string>{"csv"});
  const ExperimentConfig again = config_from_json(to_json(c));
  EXPECT_EQ(again.n_hi, 20);
}

TEST(Sweep, CircleThetaEntry) {
  const ConvergenceReport r =
      run_sweep(ExperimentConfig::from_entry(catalog_entry("circle_theta06"), 5, 30));
  ASSERT_TRUE(r.theta_fit.has_value());
  EXPECT_GE(*r.theta_fit, 0.55);
  EXPECT_LE(*r.theta_fit, 0.65);
  EXPECT_NEAR(*r.theta_pred, 0.6, 1e-15);
  EXPECT_EQ(r.per_n.size(), 26u);
  EXPECT_TRUE(r.per_n.back().theta_running.has_value());
}

TEST(Sweep, RationalExactEntry) {
  const ConvergenceReport r =
      run_sweep(ExperimentConfig::from_entry(catalog_entry("rational_exact"), 10, 40));
  for (const auto& row : r.per_n) {
    ASSERT_TRUE(row.err_coeff_norm.has_value());
    EXPECT_LE(*row.err_coeff_norm, 1e-8) << row.n;
    EXPECT_EQ(row.zeros.size(), 3u);
  }
  EXPECT_TRUE(r.exact_regime);
}

TEST(Sweep, WithoutGroundTruthOmitsTheta) {
  const ConvergenceReport r =
      run_sweep(ExperimentConfig::from_entry(catalog_entry("entire_exp"), 5, 20));
  EXPECT_FALSE(r.theta_pred.has_value());
  EXPECT_FALSE(r.theta_fit.has_value());
  const Json j = to_json(r);
  EXPECT_TRUE(j["theta_pred"].is_null());
}

TEST(Sweep, OutputsAreDeterministicAndWritten) {
  const auto cfg = ExperimentConfig::from_entry(catalog_entry("interval_d2"), 4, 24);
  const ConvergenceReport a = run_sweep(cfg);
  const ConvergenceReport b = run_sweep(cfg);
  EXPECT_EQ(to_csv(a), to_csv(b));
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  const std::string csv = to_csv(a);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "n,err_coeff_norm,theta_running,unique,degree_deficient,zero_1_re,zero_1_im,"
            "zero_2_re,zero_2_im");

  const auto dir = std::filesystem::temp_directory_path() / "ohpade_sweep_test";
  std::filesystem::remove_all(dir);
  const auto paths = write_report(a, dir.string(), {"json", "csv"});
  ASSERT_EQ(paths.size(), 2u);
  std::ifstream in(paths[1]);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), csv);
  EXPECT_FALSE(std::filesystem::exists(paths[1] + ".tmp"));
  EXPECT_THROW(write_report(a, dir.string(), {"xml"}), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST(Sweep, ErrorsCarryTheOffendingIndex) {
  ExperimentConfig c = ExperimentConfig::from_entry(catalog_entry("entire_exp"), 60, 70);
  c.method = CoeffMethod::quadrature;
  try {
    run_sweep(c);
    FAIL() << "expected a numeric error";
  } catch (const NumericError& e) {
    EXPECT_NE(std::string(e.what()).find("n = 60"), std::string::npos) << e.what();
  }
}

TEST(Verify, SuitesAndFormatting) {
  const auto names = suite_names();
  EXPECT_EQ(names.back(), "all");
  EXPECT_THROW(run_suite("bogus"), ParameterError);
  const auto r = run_suite("orthonormality");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_TRUE(r[0].pass);
  EXPECT_EQ(format_result(r[0]).substr(0, 7), "PASS C1");
  EXPECT_NE(r[0].detail.find("max residual"), std::string::npos);
  const auto eq = run_suite("circle-equivalence");
  EXPECT_TRUE(eq[0].pass);
  EXPECT_LE(eq[0].measured, 1e-10);
}

TEST(Verify, CatalogCrossChecks) {
  const CriterionResult r = check_catalog();
  EXPECT_TRUE(r.pass) << r.detail;
}
