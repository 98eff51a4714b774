#include "ohpade/poles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ohpade/errors.hpp"

namespace ohpade {

double SystemPoleSpec::rho_xi() const {
  double r = std::numeric_limits<double>::infinity();
  for (double v : rho_xi_t) r = std::min(r, v);
  return r;
}

double SystemPoleSpec::contribution(const ConformalMap& map) const {
  const double rho = rho_xi();
  if (std::isinf(rho)) return 0.0;
  return map.modulus(xi) / rho;
}

void SystemPoleSpec::validate(const ConformalMap& map) const {
  if (tau < 1) throw ParameterError("system pole order must be >= 1");
  if (static_cast<int>(rho_xi_t.size()) != tau) {
    throw ParameterError("system pole needs one rho_{xi,t} per t = 1..tau");
  }
  if (map.domain().contains(xi) || !(map.modulus(xi) > 1.0)) {
    throw ParameterError("system pole must lie outside E");
  }
}

int GroundTruth::pole_count() const {
  int total = 0;
  for (const auto& p : poles) total += p.tau;
  return total;
}

std::vector<Complex> GroundTruth::pole_list() const {
  std::vector<Complex> out;
  for (const auto& p : poles) {
    for (int t = 0; t < p.tau; ++t) out.push_back(p.xi);
  }
  return out;
}

Poly GroundTruth::q_mf() const {
  const auto list = pole_list();
  return poly_from_roots(list);
}

double predicted_theta(const GroundTruth& truth, const MultiIndex& m, const ConformalMap& map) {
  if (!truth.complete(m)) {
    throw ParameterError("predicted_theta: ground truth does not account for |m| system poles");
  }
  double theta = 0.0;
  for (const auto& p : truth.poles) {
    p.validate(map);
    theta = std::max(theta, p.contribution(map));
  }
  if (!(theta < 1.0)) throw NumericError("predicted_theta: theta must be below 1", theta);
  return theta;
}

ThetaFit measured_theta(std::span<const int> n, std::span<const double> errors, int n_lo,
                        int n_hi) {
  if (n.size() != errors.size()) throw ParameterError("measured_theta: size mismatch");
  std::vector<int> wn;
  std::vector<double> we;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (n[i] < n_lo || n[i] > n_hi) continue;
    wn.push_back(n[i]);
    we.push_back(errors[i]);
  }
  ThetaFit out;
  // Round-off plateau: the approximant is exact and any slope is noise.
  if (!we.empty() && *std::max_element(we.begin(), we.end()) <= kExactPlateau) {
    out.exact_regime = true;
    out.theta = 0.0;
    return out;
  }
  try {
    out.fit = geometric_fit(wn, we, 1e-12, 1e-2, 8);
    out.theta = out.fit.rate;
  } catch (const InsufficientDataError&) {
    if (!we.empty() && we.back() < 1e-12) {
      out.exact_regime = true;
      out.theta = 0.0;
      return out;
    }
    throw;
  }
  return out;
}

RateCheck approximation_rate_check(SystemTables& tables, const GroundTruth& truth, int i,
                                   std::span<const Complex> k_points, int n_lo, int n_hi,
                                   double slack) {
  const FunctionSystem& sys = tables.system();
  const ConformalMap& map = tables.basis().map();
  if (i < 0 || i >= sys.d()) throw ParameterError("approximation_rate_check: bad component");
  if (k_points.empty()) throw ParameterError("approximation_rate_check: empty K");
  if (static_cast<int>(truth.rho_star.size()) <= i || truth.rho_star[i].empty()) {
    throw ParameterError("approximation_rate_check: ground truth lacks rho*_{i,0}");
  }
  for (const Complex z : k_points) {
    for (const auto& p : truth.poles) {
      if (std::abs(z - p.xi) < 1e-2) {
        throw ParameterError("approximation_rate_check: K meets a system pole neighbourhood");
      }
    }
  }
  double phi_k = 1.0;
  for (const Complex z : k_points) phi_k = std::max(phi_k, map.modulus(z));
  RateCheck out;
  out.bound = phi_k / truth.rho_star[i][0];
  for (int n = n_lo; n <= n_hi; ++n) {
    const ApproximantSet approx = solve_approximant(tables, n);
    double worst = 0.0;
    for (const Complex z : k_points) {
      worst = std::max(worst, std::abs(eval_approximant(tables.basis(), approx, i, z) -
                                       sys.functions[i](z)));
    }
    out.n.push_back(n);
    out.max_error.push_back(worst);
  }
  try {
    const GeometricFit fit = geometric_fit(out.n, out.max_error, 1e-13, 1e-1, 8);
    out.fitted_rate = fit.rate;
    out.pass = out.fitted_rate <= out.bound + slack;
  } catch (const InsufficientDataError&) {
    if (!out.max_error.empty() && out.max_error.back() <= 1e-10) {
      out.exact = true;
      out.fitted_rate = 0.0;
      out.pass = true;
    } else {
      throw;
    }
  }
  return out;
}

}  // namespace ohpade
