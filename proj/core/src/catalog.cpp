#include "ohpade/catalog.hpp"

#include <cmath>
#include <limits>

#include "ohpade/errors.hpp"

namespace ohpade {

namespace {

using F = AnalyticFunction;

constexpr double kInf = std::numeric_limits<double>::infinity();

// |Φ(x)| for real x > 1 on [-1, 1].
double joukowski(double x) { return std::abs(x) + std::sqrt(x * x - 1.0); }

SystemPoleSpec simple_pole(Complex xi, double rho) { return {xi, 1, {rho}}; }

std::vector<CatalogEntry> build() {
  std::vector<CatalogEntry> out;
  const MeasureSpec circle = MeasureSpec::circle();
  const MeasureSpec cheb = MeasureSpec::chebyshev();
  const MeasureSpec leg = MeasureSpec::legendre();
  const Complex i{0.0, 1.0};

  {
    CatalogEntry e;
    e.id = "rational_exact";
    e.summary = "d = 2 rational system with exactly |m| = 3 simple system poles";
    e.measure = circle;
    e.system = {{F::pole(1.3) + F::pole(-1.6), F::pole(1.4 * i)}, {{2, 1}}};
    e.truth = GroundTruth{{simple_pole(1.3, kInf), simple_pole(-1.6, kInf),
                           simple_pole(1.4 * i, kInf)},
                          {{kInf}, {kInf}}};
    e.theta = 0.0;
    e.expect_unique = true;
    e.expect_independent = true;
    e.exact_from = 10;
    e.derivation =
        "Both functions are rational with poles 1.3, -1.6 (F1) and 1.4i (F2), so "
        "Q^F = (z - 1.3)(z + 1.6)(z - 1.4i) clears every pole and each rho_xi is "
        "infinite: theta = 0. Independence: v1 of degree <= 1 must vanish at 1.3 "
        "and -1.6, and v2 at 1.4i, so v1 = v2 = 0.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "circle_theta06";
    e.summary = "single function, one system pole at 1.2, next singularity at 2";
    e.measure = circle;
    e.system = {{F::pole(1.2) + F::pole(2.0)}, {{1}}};
    e.truth = GroundTruth{{simple_pole(1.2, 2.0)}, {{2.0}}};
    e.theta = 0.6;
    e.expect_unique = true;
    e.expect_independent = true;
    e.rho0 = 1.2;
    e.derivation =
        "Phi(z) = z on the disk. The only system pole for m = 1 is 1.2; after "
        "removing it F is holomorphic in |z| < 2, so rho_xi = rho*_{1,0} = 2 and "
        "theta = 1.2 / 2 = 0.6.";
    out.push_back(e);
  }
  const double theta_interval = joukowski(1.5) / joukowski(3.0);
  for (const bool legendre : {false, true}) {
    CatalogEntry e;
    e.id = legendre ? "interval_theta_legendre" : "interval_theta";
    e.summary = std::string("interval rate through the Joukowski map (") +
                (legendre ? "legendre" : "chebyshev") + ")";
    e.measure = legendre ? leg : cheb;
    e.system = {{F::pole(1.5) + F::pole(3.0)}, {{1}}};
    e.truth = GroundTruth{{simple_pole(1.5, joukowski(3.0))}, {{joukowski(3.0)}}};
    e.theta = theta_interval;
    e.expect_unique = true;
    e.expect_independent = true;
    e.rho0 = joukowski(1.5);
    e.derivation =
        "Phi(z) = z + sqrt(z^2 - 1). |Phi(1.5)| = 1.5 + sqrt(1.25) = 2.618034, "
        "|Phi(3)| = 3 + sqrt(8) = 5.828427; the pole at 3 bounds rho_xi, so "
        "theta = 2.618034 / 5.828427 = 0.449186.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "interval_d2";
    e.summary = "d = 2 interval system with distinct simple system poles";
    e.measure = cheb;
    e.system = {{F::pole(1.5) + F::pole(3.0), F::pole(-1.8) + F::pole(4.0)}, {{1, 1}}};
    e.truth = GroundTruth{{simple_pole(1.5, joukowski(3.0)), simple_pole(-1.8, joukowski(4.0))},
                          {{joukowski(3.0)}, {joukowski(4.0)}}};
    e.theta = theta_interval;
    e.expect_unique = true;
    e.expect_independent = true;
    e.derivation =
        "System poles 1.5 (from F1) and -1.8 (from F2). Combinations cannot remove "
        "the far poles, so rho_{1.5} = |Phi(3)| = 5.828427 and rho_{-1.8} = "
        "|Phi(4)| = 4 + sqrt(15) = 7.872983. Contributions 0.449186 and "
        "(1.8 + sqrt(2.24)) / 7.872983 = 0.418740; theta = 0.449186.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "d2_distinct";
    e.summary = "d = 2 circle system, distinct poles, one branch point";
    e.measure = circle;
    e.system = {{F::pole(1.3) + F::pole(3.0), F::pole(-1.6) + F::log(4.0)}, {{1, 1}}};
    e.truth = GroundTruth{{simple_pole(1.3, 3.0), simple_pole(-1.6, 4.0)}, {{3.0}, {4.0}}};
    e.theta = 1.3 / 3.0;
    e.expect_unique = true;
    e.derivation =
        "System poles 1.3 and -1.6. The next singularities are the pole at 3 (F1) "
        "and the branch point at 4 (F2), so rho = (3, 4) and theta = max(1.3/3, "
        "1.6/4) = 0.433333.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "d2_shared";
    e.summary = "d = 2 circle system sharing the pole 1.25";
    e.measure = circle;
    e.system = {{F::pole(1.25) + F::pole(-5.0), F::pole(1.25, 1, 2.0) + F::pole(2.5 * i)},
                {{1, 1}}};
    e.truth = GroundTruth{{simple_pole(1.25, 5.0), simple_pole(2.5 * i, 5.0)}, {{5.0}, {kInf}}};
    e.theta = 0.5;
    e.expect_unique = true;
    e.expect_independent = true;
    e.derivation =
        "F2 - 2 F1 = 1/(z - 2.5i) - 2/(z + 5) removes 1.25, so the system poles are "
        "1.25 and 2.5i. Every combination keeps the pole at -5 or 2.5i beyond the "
        "captured ones; rho_xi = 5 for both, contributions 0.25 and 0.5, theta = 0.5. "
        "F2 has no singularity left after Q^F, so rho*_{2,0} is infinite.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "dup_pair";
    e.summary = "F1 = F2, a deliberately degenerate system";
    e.measure = circle;
    const F f = F::pole(1.5) + F::pole(3.0);
    e.system = {{f, f}, {{1, 1}}};
    e.expect_unique = false;
    e.expect_independent = false;
    e.derivation = "Equal rows: F1 - F2 = 0 is a polynomial, so the system is dependent.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "poly_dependent";
    e.summary = "1/(z - 2) and z/(z - 2), polynomially dependent";
    e.measure = circle;
    e.system = {{F::pole(2.0), F::monomial(1) * F::pole(2.0)}, {{1, 1}}};
    e.expect_independent = false;
    e.derivation = "z/(z - 2) = 1 + 2/(z - 2), so 2 F1 - F2 = -1.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "entire_exp";
    e.summary = "exp(z), no system pole";
    e.measure = circle;
    e.system = {{F::exp()}, {{1}}};
    e.derivation =
        "exp is entire, so no finite zero can stabilise. On the circle the m = 1 "
        "denominator zero is f_{n-1}/f_n = n.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "incomplete_log";
    e.summary = "incomplete problem m = 2, m* = 1, pole 1.5 before a branch point at 3";
    e.measure = circle;
    e.system = {{F::pole(1.5) + F::log(3.0)}, {{2}}};
    e.incomplete = IncompleteSetup{2, 1};
    e.rho0 = 1.5;
    e.derivation =
        "rho_1(F) = 3 (branch point). One pole inside, so a zero approaches 1.5 "
        "with rate at most 1.5/3 = 0.5.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "incomplete_rational";
    e.summary = "incomplete problem m = 2, m* = 1 for 1/(z - 1.4)";
    e.measure = circle;
    e.system = {{F::pole(1.4)}, {{2}}};
    e.incomplete = IncompleteSetup{2, 1};
    e.rho0 = 1.4;
    e.derivation = "rho_1(F) is infinite; the single pole 1.4 is captured exactly.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "incomplete_exp";
    e.summary = "incomplete problem m = 2, m* = 1 for exp(z)";
    e.measure = circle;
    e.system = {{F::exp()}, {{2}}};
    e.incomplete = IncompleteSetup{2, 1};
    e.derivation = "No poles: nothing to capture, zeros drift off to infinity.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "radius_circle_pole2";
    e.summary = "1/(z - 2) on the circle";
    e.measure = circle;
    e.system = {{F::pole(2.0)}, {{1}}};
    e.truth = GroundTruth{{simple_pole(2.0, kInf)}, {{kInf}}};
    e.theta = 0.0;
    e.rho0 = 2.0;
    e.derivation = "[F]_n = -2^{-n-1}, so rho0 = |Phi(2)| = 2.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "radius_cheb_pole2";
    e.summary = "1/(z - 2) with the chebyshev measure";
    e.measure = cheb;
    e.system = {{F::pole(2.0)}, {{1}}};
    e.truth = GroundTruth{{simple_pole(2.0, kInf)}, {{kInf}}};
    e.theta = 0.0;
    e.rho0 = joukowski(2.0);
    e.derivation = "rho0 = |Phi(2)| = 2 + sqrt(3) = 3.732051.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "radius_cheb_branch3";
    e.summary = "log(3 - z) with the chebyshev measure";
    e.measure = cheb;
    e.system = {{F::log(3.0)}, {{1}}};
    e.rho0 = joukowski(3.0);
    e.derivation = "Branch point at 3: rho0 = 3 + sqrt(8) = 5.828427.";
    out.push_back(e);
  }
  {
    CatalogEntry e;
    e.id = "rational_m4";
    e.summary = "d = 2 rational system with |m| = 4";
    e.measure = circle;
    e.system = {{F::pole(1.5) + F::pole(-1.8), F::pole(1.6 * i) + F::pole(Complex(-1.2, -1.2))},
                {{2, 2}}};
    e.truth = GroundTruth{{simple_pole(1.5, kInf), simple_pole(-1.8, kInf),
                           simple_pole(1.6 * i, kInf), simple_pole(Complex(-1.2, -1.2), kInf)},
                          {{kInf}, {kInf}}};
    e.theta = 0.0;
    e.expect_unique = true;
    e.expect_independent = true;
    e.exact_from = 10;
    e.derivation =
        "Four distinct simple poles, two per function; each linear v_i must vanish "
        "at both poles of F_i, so the system is independent and theta = 0.";
    out.push_back(e);
  }
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.id == id) return e;
  }
  throw ParameterError("unknown catalog entry '" + id + "'");
}

}  // namespace ohpade
