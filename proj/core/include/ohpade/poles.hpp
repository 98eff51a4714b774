#pragma once

#include <span>
#include <string>
#include <vector>

#include "ohpade/fit.hpp"
#include "ohpade/hp_solver.hpp"
#include "ohpade/polynomial.hpp"

namespace ohpade {

// Ground-truth data for one system pole ξ of order τ.
struct SystemPoleSpec {
  Complex xi;
  int tau = 1;
  std::vector<double> rho_xi_t;  // ρ_{ξ,t}, t = 1..τ (+inf allowed)

  double rho_xi() const;  // min over t
  double contribution(const ConformalMap& map) const;  // |Φ(ξ)| / ρ_ξ
  void validate(const ConformalMap& map) const;
};

struct GroundTruth {
  std::vector<SystemPoleSpec> poles;
  // ρ*_{i,k}: index of the canonical domain where z^k F_i - R_{n,m,k,i}
  // converges; rho_star[i][0] enters the approximation-rate bound.
  std::vector<std::vector<double>> rho_star;

  int pole_count() const;
  bool complete(const MultiIndex& m) const { return pole_count() == m.total(); }
  Poly q_mf() const;  // monic, zeros = system poles with order
  std::vector<Complex> pole_list() const;
};

// θ = max |Φ(ξ)|/ρ_ξ. ParameterError if Σ τ ≠ |m|; NumericError if θ >= 1.
double predicted_theta(const GroundTruth& truth, const MultiIndex& m, const ConformalMap& map);

inline constexpr double kExactPlateau = 1e-10;

struct ThetaFit {
  double theta = 0.0;
  bool exact_regime = false;  // errors stayed at round-off level (<= kExactPlateau)
  GeometricFit fit;
};

// Fit of error_n ≈ C·θ^n over n ∈ [n_lo, n_hi] using errors in [1e-12, 1e-2].
ThetaFit measured_theta(std::span<const int> n, std::span<const double> errors, int n_lo,
                        int n_hi);

struct RateCheck {
  double bound = 0.0;        // ‖Φ‖_K / ρ*_{i,0}
  double fitted_rate = 0.0;
  bool exact = false;        // errors reached 1e-10 before a fit was possible
  bool pass = false;
  std::vector<int> n;
  std::vector<double> max_error;
};

// max_K |R_{n,m,i} - F_i| over n ∈ [n_lo, n_hi] and its geometric rate.
RateCheck approximation_rate_check(SystemTables& tables, const GroundTruth& truth, int i,
                                   std::span<const Complex> k_points, int n_lo, int n_hi,
                                   double slack = 0.05);

}  // namespace ohpade
