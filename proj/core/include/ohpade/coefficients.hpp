#pragma once

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ohpade/analytic_function.hpp"
#include "ohpade/ortho_basis.hpp"

namespace ohpade {

// How [z^k G]_n is obtained.
//   quadrature: ∫ z^k G conj(p_n) dμ with the measure's rule. Absolute error
//               near machine epsilon times max|G| on E.
//   contour:    (1/2πi) ∮_Γρ z^k G s_n dz. Error relative to the
//               coefficient itself, so deep (tiny) coefficients stay usable.
enum class CoeffMethod { quadrature, contour };

std::string to_string(CoeffMethod method);
CoeffMethod coeff_method_from_string(const std::string& name);

struct CoeffValue {
  Complex value;
  double noise = 0.0;  // rounding-level magnitude of the computed sum
};

Complex coeff_quadrature(const OrthoBasis& basis, const AnalyticFunction& g, int k, int n);
// [z^k G]_n for n = 0 .. count-1, sharing one doubling loop.
std::vector<CoeffValue> coeff_quadrature_all(const OrthoBasis& basis,
                                             const AnalyticFunction& g, int k, int count);

Complex coeff_contour(const OrthoBasis& basis, const AnalyticFunction& g, int n, double rho);
// [z^k G]_n for k = 0 .. max_shift on one contour (shared doubling loop).
std::vector<CoeffValue> coeff_contour_shifts(const OrthoBasis& basis,
                                             const AnalyticFunction& g, int n,
                                             int max_shift, double rho);
// Level curve index used by default for [G]_n.
double default_contour_rho(const OrthoBasis& basis, const AnalyticFunction& g, int n);

struct RadiusEstimate {
  double rho0 = 0.0;
  bool infinite = false;  // every window coefficient below the floor
  int points = 0;
  double slope = 0.0;
};

// ρ₀ from a log-linear fit of |c_n| over n ∈ [n_lo, n_hi], using entries with
// floor <= |c_n| <= ceiling.
RadiusEstimate radius_from_coeffs(std::span<const Complex> coeffs, int n_lo, int n_hi,
                                  double floor = 1e-13, double ceiling = 1e-1);
// Window chosen as [5, size-1].
RadiusEstimate radius_from_coeffs(std::span<const Complex> coeffs, double floor = 1e-13);

// c[k][n] = [z^k G]_n, extended on demand.
class CoeffTable {
 public:
  CoeffTable(std::shared_ptr<const OrthoBasis> basis, AnalyticFunction g,
             CoeffMethod method = CoeffMethod::contour);

  void ensure(int max_shift, int max_index);
  bool covers(int k, int n) const;
  Complex at(int k, int n) const;
  double noise(int k, int n) const;

  int max_shift() const { return static_cast<int>(values_.size()) - 1; }
  int max_index() const { return max_index_; }
  CoeffMethod method() const { return method_; }
  const AnalyticFunction& function() const { return g_; }
  const OrthoBasis& basis() const { return *basis_; }
  std::shared_ptr<const OrthoBasis> basis_ptr() const { return basis_; }
  // Row k as a vector over n.
  std::vector<Complex> row(int k) const;

 private:
  std::shared_ptr<const OrthoBasis> basis_;
  AnalyticFunction g_;
  CoeffMethod method_;
  int max_index_ = -1;
  std::vector<std::vector<CoeffValue>> values_;  // [k][n]
};

}  // namespace ohpade
