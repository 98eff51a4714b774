#include "ohpade/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ohpade/errors.hpp"
#include "ohpade/experiment.hpp"
#include "ohpade/incomplete.hpp"
#include "ohpade/independence.hpp"

namespace ohpade {

namespace {

constexpr double kOrthoCircleTol = 1e-12;
constexpr double kOrthoIntervalTol = 1e-10;
constexpr double kEquivalenceTol = 1e-10;
constexpr double kExactTol = 1e-8;
constexpr double kThetaSlack = 0.05;
constexpr double kRadiusRelTol = 0.05;
constexpr double kCrossMethodTol = 1e-9;
constexpr double kSecondTypeTol = 1e-10;
constexpr double kKappaFloor = 0.1;
constexpr double kCaptureDistance = 1e-4;
constexpr double kCaptureRate = 0.55;
constexpr double kDriftMin = 0.1;
constexpr double kCatalogTol = 1e-12;

using BasisPtr = std::shared_ptr<const OrthoBasis>;

BasisPtr make_basis(const MeasureSpec& m, int n) {
  return std::make_shared<const OrthoBasis>(OrthoBasis::build(m, n));
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

std::string fixed(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

CriterionResult result(const char* id, const char* name) {
  CriterionResult r;
  r.id = id;
  r.name = name;
  return r;
}

CriterionResult timed(const std::function<CriterionResult()>& check, const char* id,
                      const char* name) {
  const auto t0 = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = check();
  } catch (const std::exception& e) {
    r = result(id, name);
    r.pass = false;
    r.measured = std::nan("");
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

std::vector<Complex> zeros_of(const DenominatorResult& q) {
  return root_list(Poly(q.q.begin(), q.q.begin() + q.degree + 1));
}

// Distinct functions appearing anywhere in the catalog.
std::vector<AnalyticFunction> catalog_functions() {
  std::vector<AnalyticFunction> out;
  std::set<std::string> seen;
  for (const auto& e : catalog()) {
    for (const auto& f : e.system.functions) {
      if (seen.insert(f.describe()).second) out.push_back(f);
    }
  }
  return out;
}

ConvergenceReport sweep(const std::string& id, int n_lo, int n_hi) {
  return run_sweep(ExperimentConfig::from_entry(catalog_entry(id), n_lo, n_hi));
}

}  // namespace

CriterionResult check_orthonormality() {
  auto r = result("C1", "orthonormality");
  r.threshold = kOrthoCircleTol;
  std::ostringstream os;
  bool pass = true;
  double worst_ratio = 0.0;
  for (const auto& m : {MeasureSpec::circle(), MeasureSpec::chebyshev(), MeasureSpec::legendre()}) {
    const double res = OrthoBasis::build(m, 60).orthonormality_residual();
    const double tol = m.weight == WeightKind::circle_lebesgue ? kOrthoCircleTol : kOrthoIntervalTol;
    pass = pass && res <= tol;
    worst_ratio = std::max(worst_ratio, res / tol);
    os << to_string(m.weight) << " " << sci(res) << " (tol " << sci(tol) << ") ";
    r.measured = std::max(r.measured, res);
  }
  r.pass = pass;
  r.detail = os.str() + "max residual " + sci(r.measured);
  return r;
}

CriterionResult check_circle_equivalence() {
  auto r = result("C2", "circle-equivalence");
  r.threshold = kEquivalenceTol;
  auto basis = make_basis(MeasureSpec::circle(), 30);
  std::ostringstream os;
  for (const char* id : {"circle_theta06", "d2_distinct", "rational_exact", "rational_m4"}) {
    const auto& e = catalog_entry(id);
    SystemTables tables(basis, e.system);
    std::vector<std::vector<Complex>> taylor;
    for (const auto& f : e.system.functions) taylor.push_back(f.taylor(31));
    double worst = 0.0;
    for (int n = e.system.multi_index.max(); n <= 30; ++n) {
      const ApproximantSet a = solve_approximant(tables, n);
      const ClassicalResult c = classical_hp_oracle(taylor, n, e.system.multi_index);
      worst = std::max(worst, coeff_distance(a.denominator.q, c.q));
    }
    r.measured = std::max(r.measured, worst);
    os << id << " " << sci(worst) << " ";
  }
  r.pass = r.measured <= r.threshold;
  r.detail = os.str() + "max coefficient deviation " + sci(r.measured);
  return r;
}

CriterionResult check_exact_recovery() {
  auto r = result("C3", "exact-recovery");
  r.threshold = kExactTol;
  const auto& e = catalog_entry("rational_exact");
  auto basis = make_basis(e.measure, 40);
  SystemTables tables(basis, e.system);
  const Poly target = e.truth->q_mf();
  const auto poles = e.truth->pole_list();
  double coeff_err = 0.0, zero_err = 0.0;
  for (int n = 10; n <= 40; ++n) {
    const ApproximantSet a = solve_approximant(tables, n);
    coeff_err = std::max(coeff_err, coeff_distance(a.denominator.q, target));
    for (double d : match_distances(poles, zeros_of(a.denominator))) zero_err = std::max(zero_err, d);
  }
  r.measured = std::max(coeff_err, zero_err);
  r.pass = r.measured <= r.threshold;
  r.detail = "max ||Q_n - Q^F|| " + sci(coeff_err) + ", max zero distance " + sci(zero_err) +
             " over n in [10, 40]";
  return r;
}

CriterionResult check_rate_circle() {
  auto r = result("C4", "rate-circle");
  r.threshold = kThetaSlack;
  const auto rep = sweep("circle_theta06", 5, 30);
  if (!rep.theta_fit) throw InsufficientDataError("no theta fit");
  r.measured = std::abs(*rep.theta_fit - 0.6);
  r.pass = r.measured <= r.threshold;
  r.detail = "theta_fit " + fixed(*rep.theta_fit) + ", predicted " + fixed(*rep.theta_pred);
  return r;
}

CriterionResult check_rate_interval() {
  auto r = result("C5", "rate-interval");
  r.threshold = kThetaSlack;
  const double expected = (1.5 + std::sqrt(1.25)) / (3.0 + std::sqrt(8.0));
  std::ostringstream os;
  const auto rep = sweep("interval_theta", 5, 30);
  if (!rep.theta_fit) throw InsufficientDataError("no theta fit");
  r.measured = std::abs(*rep.theta_fit - expected);
  r.pass = r.measured <= r.threshold;
  os << "chebyshev theta_fit " << fixed(*rep.theta_fit) << ", expected " << fixed(expected);
  try {
    const auto leg = sweep("interval_theta_legendre", 5, 30);
    if (leg.theta_fit) os << "; legendre (reported) " << fixed(*leg.theta_fit);
  } catch (const Error& e) {
    os << "; legendre failed: " << e.what();
  }
  r.detail = os.str();
  return r;
}

CriterionResult check_radius() {
  auto r = result("C6", "radius");
  r.threshold = kRadiusRelTol;
  struct Case {
    const char* id;
    int lo;
    int hi;
  };
  std::ostringstream os;
  for (const Case c : {Case{"radius_circle_pole2", 10, 40}, Case{"radius_cheb_pole2", 10, 40},
                       Case{"radius_cheb_branch3", 20, 60}}) {
    const auto& e = catalog_entry(c.id);
    CoeffTable table(make_basis(e.measure, c.hi), e.system.functions[0]);
    table.ensure(0, c.hi);
    const RadiusEstimate est = radius_from_coeffs(table.row(0), c.lo, c.hi, 1e-290);
    const double rel = std::abs(est.rho0 / *e.rho0 - 1.0);
    r.measured = std::max(r.measured, rel);
    os << c.id << " " << fixed(est.rho0) << " vs " << fixed(*e.rho0) << " ";
  }
  r.pass = r.measured <= r.threshold;
  r.detail = os.str() + "max relative error " + sci(r.measured);
  return r;
}

CriterionResult check_cross_method() {
  auto r = result("C7", "cross-method");
  r.threshold = kCrossMethodTol;
  const auto functions = catalog_functions();
  std::ostringstream os;
  for (const auto& m : {MeasureSpec::circle(), MeasureSpec::chebyshev()}) {
    auto basis = make_basis(m, 40);
    double worst = 0.0;
    for (const auto& f : functions) {
      CoeffTable quad(basis, f, CoeffMethod::quadrature);
      CoeffTable cont(basis, f, CoeffMethod::contour);
      quad.ensure(0, 40);
      cont.ensure(0, 40);
      for (int n = 0; n <= 40; ++n) worst = std::max(worst, std::abs(quad.at(0, n) - cont.at(0, n)));
    }
    r.measured = std::max(r.measured, worst);
    os << to_string(m.weight) << " " << sci(worst) << " ";
  }
  r.pass = r.measured <= r.threshold;
  r.detail = os.str() + "over " + std::to_string(functions.size()) + " functions, n <= 40";
  return r;
}

CriterionResult check_second_type() {
  auto r = result("C8", "second-type");
  r.threshold = kSecondTypeTol;
  const Complex probes[] = {{3.0, 0.0}, {0.0, 1.5}, {-2.0, 1.0}, {1.2, 0.5}, {0.5, -2.0}};
  std::ostringstream os;
  for (const auto& m : {MeasureSpec::circle(), MeasureSpec::chebyshev()}) {
    const OrthoBasis b = OrthoBasis::build(m, 40);
    double worst = 0.0;
    for (const Complex z : probes) {
      const auto p = b.eval_all(z, 41);
      const auto s = b.second_type_all(z, 41);
      for (int n = 0; n <= 40; ++n) {
        worst = std::max(worst, std::abs(p[n] * s[n] - b.cauchy_norm_integral(n, z)));
      }
    }
    r.measured = std::max(r.measured, worst);
    os << to_string(m.weight) << " " << sci(worst) << " ";
  }
  r.pass = r.measured <= r.threshold;
  r.detail = os.str() + "(5 probes, n <= 40)";
  return r;
}

CriterionResult check_kappa() {
  auto r = result("C9", "kappa");
  r.threshold = kKappaFloor;
  // The floor is enforced for m up to the largest |m| the catalog uses on a
  // measure; larger m are reported only.
  std::map<WeightKind, int> used;
  for (const auto& e : catalog()) {
    used[e.measure.weight] = std::max(used[e.measure.weight], e.system.multi_index.total());
  }
  std::ostringstream os;
  bool pass = true;
  double gated_min = std::numeric_limits<double>::infinity();
  for (const auto& m : {MeasureSpec::circle(), MeasureSpec::chebyshev(), MeasureSpec::legendre()}) {
    const OrthoBasis b = OrthoBasis::build(m, 60);
    os << to_string(m.weight) << ":";
    for (int k = 1; k <= 4; ++k) {
      const KappaEnvelope env = b.kappa_envelope(k);
      const bool upper = env.max_ratio <= env.bound * (1.0 + 1e-12);
      const bool gated = k <= used[m.weight];
      pass = pass && upper && (!gated || env.min_ratio >= kKappaFloor);
      if (gated) gated_min = std::min(gated_min, env.min_ratio);
      os << " m=" << k << " [" << fixed(env.min_ratio) << ", " << fixed(env.max_ratio)
         << "] <= " << fixed(env.bound) << (upper ? "" : " UPPER-FAIL") << (gated ? "*" : "");
    }
    os << "; ";
  }
  r.measured = gated_min;
  r.pass = pass;
  r.detail = os.str() + "(* floor enforced)";
  return r;
}

CriterionResult check_pole_capture() {
  auto r = result("C10", "pole-capture");
  r.threshold = kCaptureDistance;
  const auto& e = catalog_entry("incomplete_log");
  const CaptureTrace tr = pole_capture_trace(make_basis(e.measure, 30), e.system.functions[0],
                                             e.incomplete->m, e.incomplete->m_star, 10, 30);
  const double d30 = tr.steps.back().max_distance;
  const double rate = tr.fit ? tr.fit->rate : std::nan("");
  r.measured = d30;
  r.pass = d30 < kCaptureDistance && tr.fit && rate <= kCaptureRate;
  r.detail = "distance at n = 30 " + sci(d30) + ", fitted rate " + fixed(rate) + " (limit " +
             fixed(kCaptureRate) + ")";
  return r;
}

CriterionResult check_inverse() {
  auto r = result("C11", "inverse");
  r.threshold = kDriftMin;
  const auto& dup = catalog_entry("dup_pair");
  auto basis = make_basis(dup.measure, 30);
  SystemTables tables(basis, dup.system);
  int unique_count = 0;
  for (int n = 10; n <= 30; ++n) {
    if (solve_approximant(tables, n).denominator.unique) ++unique_count;
  }
  const auto& ent = catalog_entry("entire_exp");
  SystemTables et(basis, ent.system);
  const auto z20 = zeros_of(solve_approximant(et, 20).denominator);
  const auto z30 = zeros_of(solve_approximant(et, 30).denominator);
  double drift = std::numeric_limits<double>::infinity();
  if (!z20.empty() && !z30.empty()) drift = std::abs(z20.front() - z30.front());
  r.measured = drift;
  r.pass = unique_count == 0 && drift > kDriftMin;
  std::ostringstream os;
  os << "dup_pair unique for " << unique_count << " of 21 n; exp zero drift n=20->30 "
     << fixed(drift);
  r.detail = os.str();
  return r;
}

CriterionResult check_approximation_rate() {
  auto r = result("C12", "approximation-rate");
  const auto& e = catalog_entry("circle_theta06");
  SystemTables tables(make_basis(e.measure, 30), e.system);
  const Complex k_points[] = {{0.0, 0.0}, {0.3, 0.0}, {0.0, 0.3}};
  const RateCheck rc = approximation_rate_check(tables, *e.truth, 0, k_points, 5, 30);
  r.threshold = rc.bound + kThetaSlack;
  r.measured = rc.fitted_rate;
  r.pass = rc.pass;
  r.detail = "fitted rate " + fixed(rc.fitted_rate) + (rc.exact ? " (exact regime)" : "") +
             ", bound " + fixed(rc.bound) + " + 0.05";
  return r;
}

CriterionResult check_catalog() {
  auto r = result("catalog", "catalog");
  r.threshold = kCatalogTol;
  std::ostringstream os;
  bool pass = true;
  auto circle = make_basis(MeasureSpec::circle(), 40);
  for (const auto& e : catalog()) {
    const ConformalMap map(e.measure.domain);
    std::vector<std::string> bad;
    e.system.validate(e.measure.domain);
    if (e.truth && e.theta && e.truth->complete(e.system.multi_index)) {
      const double dev = std::abs(predicted_theta(*e.truth, e.system.multi_index, map) - *e.theta);
      r.measured = std::max(r.measured, dev);
      if (dev > kCatalogTol) bad.push_back("theta");
    }
    if (e.rho0) {
      const double dev = std::abs(e.system.functions[0].rho0(map) / *e.rho0 - 1.0);
      r.measured = std::max(r.measured, dev);
      if (dev > kCatalogTol) bad.push_back("rho0");
    }
    if (e.expect_independent && poly_independence_check(e.system) != *e.expect_independent) {
      bad.push_back("independence");
    }
    if (e.expect_unique) {
      auto basis = make_basis(e.measure, 30);
      SystemTables tables(basis, e.system);
      if (solve_approximant(tables, 20).denominator.unique != *e.expect_unique) {
        bad.push_back("uniqueness");
      }
    }
    // On the circle [F]_n is the Taylor coefficient; compare with the
    // closed-form series of each primitive.
    if (e.measure.weight == WeightKind::circle_lebesgue) {
      for (const auto& f : e.system.functions) {
        CoeffTable t(circle, f);
        t.ensure(0, 40);
        const auto series = f.taylor(41);
        for (int n = 0; n <= 40; ++n) {
          const double dev = std::abs(t.at(0, n) - series[n]);
          r.measured = std::max(r.measured, dev);
          if (dev > kCatalogTol) {
            bad.push_back("taylor");
            break;
          }
        }
      }
    }
    if (!bad.empty()) {
      pass = false;
      os << e.id << " failed:";
      for (const auto& b : bad) os << " " << b;
      os << "; ";
    }
  }
  r.pass = pass;
  r.detail = os.str() + std::to_string(catalog().size()) + " entries, max deviation " +
             sci(r.measured);
  return r;
}

namespace {

struct Suite {
  const char* name;
  const char* id;
  CriterionResult (*check)();
};

constexpr Suite kSuites[] = {
    {"orthonormality", "C1", check_orthonormality},
    {"circle-equivalence", "C2", check_circle_equivalence},
    {"exact-recovery", "C3", check_exact_recovery},
    {"rate-circle", "C4", check_rate_circle},
    {"rate-interval", "C5", check_rate_interval},
    {"radius", "C6", check_radius},
    {"cross-method", "C7", check_cross_method},
    {"second-type", "C8", check_second_type},
    {"kappa", "C9", check_kappa},
    {"pole-capture", "C10", check_pole_capture},
    {"inverse", "C11", check_inverse},
    {"approximation-rate", "C12", check_approximation_rate},
    {"catalog", "catalog", check_catalog},
};

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& s : kSuites) out.emplace_back(s.name);
  out.emplace_back("all");
  return out;
}

std::vector<CriterionResult> run_suite(const std::string& name) {
  std::vector<CriterionResult> out;
  for (const auto& s : kSuites) {
    if (name == "all" || name == s.name || name == s.id) out.push_back(timed(s.check, s.id, s.name));
  }
  if (out.empty()) throw ParameterError("unknown verify suite '" + name + "'");
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.pass ? "PASS " : "FAIL ") << r.id << " " << r.name << ": measured " << sci(r.measured)
     << ", threshold " << sci(r.threshold) << " (" << fixed(r.seconds) << " s) " << r.detail;
  return os.str();
}

Json to_json(const CriterionResult& r) {
  return {{"id", r.id},
          {"name", r.name},
          {"measured", std::isfinite(r.measured) ? Json(r.measured) : Json(nullptr)},
          {"threshold", r.threshold},
          {"pass", r.pass},
          {"detail", r.detail},
          {"seconds", r.seconds}};
}

}  // namespace ohpade
