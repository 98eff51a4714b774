// Acceptance gate: one PASS/FAIL line per criterion. Each tolerance and
// runtime budget is pinned here and compared against what the library
// measured, independently of the library's own pass flag.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>

#include "ohpade/verify.hpp"

using namespace ohpade;

namespace {

enum class Sense { at_most, at_least };

struct Criterion {
  const char* id;
  const char* what;
  std::function<CriterionResult()> run;
  double tolerance;
  Sense sense;
  double budget_seconds;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"C1", "orthonormality residual, N = 60", check_orthonormality, 1e-12, Sense::at_most, 5.0},
      {"C2", "circle equivalence with the classical system", check_circle_equivalence, 1e-10,
       Sense::at_most, 10.0},
      {"C3", "exact rational recovery, n in [10, 40]", check_exact_recovery, 1e-8, Sense::at_most,
       10.0},
      {"C4", "|theta_fit - 0.6| on the circle", check_rate_circle, 0.05, Sense::at_most, 60.0},
      {"C5", "|theta_fit - 0.4492| on the interval", check_rate_interval, 0.05, Sense::at_most,
       60.0},
      {"C6", "relative error of rho0 estimates", check_radius, 0.05, Sense::at_most, 60.0},
      {"C7", "quadrature vs contour coefficients", check_cross_method, 1e-9, Sense::at_most, 60.0},
      {"C8", "p_n s_n identity", check_second_type, 1e-10, Sense::at_most, 60.0},
      {"C9", "kappa ratio lower envelope", check_kappa, 0.1, Sense::at_least, 60.0},
      {"C10", "pole capture distance at n = 30", check_pole_capture, 1e-4, Sense::at_most, 60.0},
      {"C11", "entire-function zero drift", check_inverse, 0.1, Sense::at_least, 60.0},
      {"C12", "approximation rate on K", check_approximation_rate, 0.55, Sense::at_most, 60.0},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    const CriterionResult r = c.run();
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool within = c.sense == Sense::at_most ? r.measured <= c.tolerance
                                                  : r.measured >= c.tolerance;
    // C1 has a looser interval tolerance and C9/C10/C11/C12 carry side
    // conditions (upper bound, fitted rate, uniqueness); those live in r.pass.
    const bool pass = r.pass && std::isfinite(r.measured) && within && secs <= c.budget_seconds;
    if (!pass) ++failures;
    std::printf("%s %-4s %-46s measured %.3e %s %.3e  %.2fs/%.0fs  %s\n", pass ? "PASS" : "FAIL",
                c.id, c.what, r.measured, c.sense == Sense::at_most ? "<=" : ">=", c.tolerance,
                secs, c.budget_seconds, r.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
