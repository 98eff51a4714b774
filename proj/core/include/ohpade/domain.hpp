#pragma once

#include <complex>
#include <string>
#include <vector>

namespace ohpade {

using Complex = std::complex<double>;

enum class DomainKind { unit_disk, interval };

// A compact set E with simply connected complement. Only the closed unit
// disk and real segments [a, b] are shipped.
struct Domain {
  DomainKind kind = DomainKind::unit_disk;
  double a = -1.0;  // interval endpoints; ignored for the disk
  double b = 1.0;

  static Domain unit_disk() { return {}; }
  static Domain interval(double a = -1.0, double b = 1.0);

  // ‖z‖_E, the sup-norm of the identity on E.
  double sup_norm() const;
  double diameter() const;
  // Logarithmic capacity: 1 for the disk, (b - a)/4 for a segment.
  double capacity() const;
  double distance_to(Complex z) const;
  bool contains(Complex z, double tol = 0.0) const;
  // Point used as expansion center for branch cuts and contour checks.
  Complex center() const;

  std::string describe() const;
  bool operator==(const Domain&) const = default;
};

// Exterior conformal map Φ of the complement of E onto |w| > 1 with
// Φ(∞) = ∞ and Φ'(∞) > 0.
class ConformalMap {
 public:
  explicit ConformalMap(Domain domain = {});

  const Domain& domain() const { return domain_; }

  // Φ(z). On the disk, |z| < 1 throws DomainError. On a segment, points of
  // E map to the unit circle (endpoints to ±1).
  Complex phi(Complex z) const;
  // |Φ(z)|, extended by 1 on E (never throws).
  double modulus(Complex z) const;
  // Φ⁻¹(w) for |w| >= 1 and its derivative in w.
  Complex inverse(Complex w) const;
  Complex inverse_derivative(Complex w) const;

  // `count` points of Γ_ρ ordered counterclockwise, starting at angle 0.
  std::vector<Complex> level_curve(double rho, int count) const;
  // z ∈ D_ρ = E ∪ {|Φ(z)| < ρ}.
  bool in_canonical_domain(Complex z, double rho) const;

 private:
  Complex to_unit(Complex z) const;
  Complex from_unit(Complex u) const;

  Domain domain_;
  double center_ = 0.0;
  double half_length_ = 1.0;
};

}  // namespace ohpade
