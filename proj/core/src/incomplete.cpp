#include "ohpade/incomplete.hpp"

#include <algorithm>

#include "ohpade/errors.hpp"

namespace ohpade {

void IncompleteSpec::validate() const {
  if (m_star < 1 || m < m_star) throw ParameterError("incomplete: need m >= m_star >= 1");
  if (n < 0) throw ParameterError("incomplete: n must be >= 0");
}

DenominatorResult solve_incomplete(CoeffTable& table, int m, int m_star, int n,
                                   const SolverOptions& options) {
  IncompleteSpec{table.function(), m, m_star, n}.validate();
  table.ensure(m + m_star - 1, n);
  const AssembledSystem sys = assemble_rows(table, n, m_star, m + 1);
  DenominatorResult res = solve_denominator(sys.matrix, &sys.noise, options);
  res.n = n;
  return res;
}

DenominatorResult solve_incomplete(std::shared_ptr<const OrthoBasis> basis,
                                   const IncompleteSpec& spec, CoeffMethod method,
                                   const SolverOptions& options) {
  spec.validate();
  CoeffTable table(std::move(basis), spec.f, method);
  return solve_incomplete(table, spec.m, spec.m_star, spec.n, options);
}

CaptureTrace pole_capture_trace(std::shared_ptr<const OrthoBasis> basis,
                                const AnalyticFunction& f, int m, int m_star, int n_lo,
                                int n_hi, CoeffMethod method, const SolverOptions& options) {
  IncompleteSpec{f, m, m_star, n_lo}.validate();
  if (n_hi < n_lo) throw ParameterError("pole_capture_trace: empty n range");
  CaptureTrace trace;
  const Meromorphy mero = f.meromorphy(basis->map(), m_star);
  trace.rho_m_star = mero.rho;
  trace.poles = mero.poles;
  if (trace.poles.empty()) return trace;

  std::vector<Complex> targets;
  for (const auto& p : trace.poles) {
    for (int k = 0; k < p.order; ++k) targets.push_back(p.location);
  }
  CoeffTable table(basis, f, method);
  table.ensure(m + m_star - 1, n_hi);
  std::vector<int> ns;
  std::vector<double> dist;
  for (int n = n_lo; n <= n_hi; ++n) {
    const DenominatorResult q = solve_incomplete(table, m, m_star, n, options);
    CaptureStep step;
    step.n = n;
    step.zeros = root_list(q.q);
    step.distances = match_distances(targets, step.zeros);
    step.max_distance = step.distances.empty()
                            ? 0.0
                            : *std::max_element(step.distances.begin(), step.distances.end());
    step.nullspace_dim = q.nullspace_dim;
    ns.push_back(n);
    dist.push_back(step.max_distance);
    trace.steps.push_back(std::move(step));
  }
  try {
    trace.fit = geometric_fit(ns, dist, 1e-13, 1e-1, 5);
  } catch (const InsufficientDataError&) {
    trace.fit.reset();
  }
  return trace;
}

}  // namespace ohpade
