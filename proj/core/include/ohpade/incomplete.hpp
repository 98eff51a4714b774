#pragma once

#include <optional>
#include <vector>

#include "ohpade/fit.hpp"
#include "ohpade/hp_solver.hpp"

namespace ohpade {

struct IncompleteSpec {
  AnalyticFunction f;
  int m = 1;
  int m_star = 1;
  int n = 1;

  void validate() const;
};

// Denominator of degree <= m from the m_star × (m+1) system
// M[k][j] = [z^{j+k} F]_n. nullspace_dim in the result is at least m+1-m_star.
DenominatorResult solve_incomplete(CoeffTable& table, int m, int m_star, int n,
                                   const SolverOptions& options = {});
DenominatorResult solve_incomplete(std::shared_ptr<const OrthoBasis> basis,
                                   const IncompleteSpec& spec,
                                   CoeffMethod method = CoeffMethod::contour,
                                   const SolverOptions& options = {});

struct CaptureStep {
  int n = 0;
  std::vector<Complex> zeros;
  std::vector<double> distances;  // one per tracked pole, optimal assignment
  double max_distance = 0.0;
  int nullspace_dim = 0;
};

struct CaptureTrace {
  double rho_m_star = 0.0;         // ρ_{m*}(F)
  std::vector<Singularity> poles;  // poles of F inside D_{ρ_{m*}(F)}
  std::vector<CaptureStep> steps;
  std::optional<GeometricFit> fit;  // decay of max_distance, when fittable
};

CaptureTrace pole_capture_trace(std::shared_ptr<const OrthoBasis> basis,
                                const AnalyticFunction& f, int m, int m_star, int n_lo,
                                int n_hi, CoeffMethod method = CoeffMethod::contour,
                                const SolverOptions& options = {});

}  // namespace ohpade
