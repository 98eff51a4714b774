#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <vector>

#include "ohpade/domain.hpp"
#include "ohpade/recurrence.hpp"

namespace ohpade {

enum class WeightKind { circle_lebesgue, chebyshev, legendre, jacobi };

std::string to_string(WeightKind kind);
WeightKind weight_kind_from_string(const std::string& name);

// A unit-mass measure on E. The circle weight lives on |z| = 1 (the boundary
// of the unit disk); the other weights live on the interval domain and are
// the affine push-forward of the corresponding weight on [-1, 1].
struct MeasureSpec {
  Domain domain;
  WeightKind weight = WeightKind::circle_lebesgue;
  double alpha = 0.0;  // jacobi exponents, ignored otherwise
  double beta = 0.0;
  double oversampling = 4.0;
  double quad_tol = 1e-13;

  static MeasureSpec circle();
  static MeasureSpec chebyshev(Domain interval = Domain::interval());
  static MeasureSpec legendre(Domain interval = Domain::interval());
  static MeasureSpec jacobi(double alpha, double beta, Domain interval = Domain::interval());

  // Throws ParameterError when the weight and domain do not fit together.
  void validate() const;
  std::string describe() const;
};

struct QuadratureRule {
  std::vector<Complex> nodes;
  std::vector<double> weights;
};

struct RegDiagnostic {
  Complex z;
  int n = 0;
  double p_root = 0.0;    // |p_n(z)|^{1/n}
  double phi_abs = 0.0;   // |Φ(z)|
  double s_root = 0.0;    // |s_n(z)|^{1/n}
  double phi_inv = 0.0;   // |Φ(z)|^{-1}
};

struct KappaEnvelope {
  int m = 0;
  double min_ratio = 0.0;  // min over m <= n <= N of κ_{n-m}/κ_n
  double max_ratio = 0.0;
  double bound = 0.0;      // ‖z‖_E^m
  bool degenerating = false;
};

// Orthonormal polynomials p_0..p_N of a MeasureSpec with positive leading
// coefficients. Immutable after build(); quadrature rules are cached lazily
// behind a mutex so concurrent evaluation is safe.
class OrthoBasis {
 public:
  static OrthoBasis build(const MeasureSpec& measure, int max_degree);

  OrthoBasis(const OrthoBasis& other);
  OrthoBasis(OrthoBasis&&) noexcept;
  OrthoBasis& operator=(const OrthoBasis& other);
  OrthoBasis& operator=(OrthoBasis&&) noexcept;
  ~OrthoBasis();

  const MeasureSpec& measure() const { return measure_; }
  const ConformalMap& map() const { return map_; }
  int max_degree() const { return max_degree_; }
  bool on_circle() const { return measure_.weight == WeightKind::circle_lebesgue; }

  double kappa(int n) const;
  const std::vector<double>& kappas() const { return kappa_; }
  double orthonormality_residual() const { return ortho_residual_; }

  Complex eval(int n, Complex z) const;
  // p_0(z) .. p_{count-1}(z); count may exceed N + 1 (the recurrence is
  // extended on demand), which the coefficient engines rely on.
  std::vector<Complex> eval_all(Complex z, int count) const;

  // s_n(z) = ∫ conj(p_n(ζ)) / (z - ζ) dμ(ζ). Closed form on the circle,
  // minimal solution of the recurrence on the interval (relative accuracy).
  Complex second_type(int n, Complex z) const;
  std::vector<Complex> second_type_all(Complex z, int count) const;
  // The same integral by node-doubled quadrature (absolute accuracy only).
  Complex second_type_quadrature(int n, Complex z) const;
  // ∫ |p_n(ζ)|² / (z - ζ) dμ(ζ) by quadrature.
  Complex cauchy_norm_integral(int n, Complex z) const;
  // Distance to supp(μ) below which s_n evaluation is refused.
  double support_cutoff() const;
  double distance_to_support(Complex z) const;

  // Rule with exactly `points` nodes (trapezoid on the circle, Gauss on the
  // interval); cached.
  std::shared_ptr<const QuadratureRule> rule(int points) const;
  // Node count for an integrand of the given polynomial degree.
  int initial_points(int degree) const;
  // ∫ f dμ with node doubling from initial_points(degree_hint) until two
  // successive values differ by at most quad_tol.
  Complex integrate(const std::function<Complex(Complex)>& f, int degree_hint) const;
  // Vector version: ∫ f_i dμ for all i at once, with a shared doubling loop.
  std::vector<Complex> integrate_many(
      const std::function<void(Complex, std::span<Complex>)>& f, int count,
      int degree_hint, int* final_points = nullptr) const;

  std::vector<RegDiagnostic> reg_diagnostics(std::span<const Complex> probes,
                                             std::span<const int> degrees) const;
  double kappa_ratio(int n, int m) const;
  KappaEnvelope kappa_envelope(int m) const;

  // Recurrence on the reference interval [-1, 1] (empty on the circle).
  const Recurrence<double>& reference_recurrence() const { return rec_; }

  static constexpr int kMaxQuadraturePoints = 1 << 15;

 private:
  OrthoBasis() = default;
  Recurrence<double> recurrence_for(int size) const;
  Complex to_reference(Complex z) const;
  double orthonormality_check() const;

  MeasureSpec measure_;
  ConformalMap map_;
  int max_degree_ = 0;
  std::vector<double> kappa_;
  Recurrence<double> rec_;
  double ortho_residual_ = 0.0;

  mutable std::mutex cache_mutex_;
  mutable std::map<int, std::shared_ptr<const QuadratureRule>> rules_;
};

}  // namespace ohpade
