#include "ohpade/domain.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ohpade/errors.hpp"

namespace ohpade {

Domain Domain::interval(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) {
    throw ParameterError("interval domain requires finite endpoints a < b");
  }
  return Domain{DomainKind::interval, a, b};
}

double Domain::sup_norm() const {
  if (kind == DomainKind::unit_disk) return 1.0;
  return std::max(std::abs(a), std::abs(b));
}

double Domain::diameter() const {
  return kind == DomainKind::unit_disk ? 2.0 : b - a;
}

double Domain::capacity() const {
  return kind == DomainKind::unit_disk ? 1.0 : (b - a) / 4.0;
}

double Domain::distance_to(Complex z) const {
  if (kind == DomainKind::unit_disk) return std::max(0.0, std::abs(z) - 1.0);
  const double x = std::clamp(z.real(), a, b);
  return std::abs(z - Complex(x, 0.0));
}

bool Domain::contains(Complex z, double tol) const {
  return distance_to(z) <= tol;
}

Complex Domain::center() const {
  return kind == DomainKind::unit_disk ? Complex(0.0) : Complex(0.5 * (a + b));
}

std::string Domain::describe() const {
  if (kind == DomainKind::unit_disk) return "unit_disk";
  std::ostringstream os;
  os << "interval[" << a << ", " << b << "]";
  return os.str();
}

ConformalMap::ConformalMap(Domain domain) : domain_(domain) {
  if (domain_.kind == DomainKind::interval) {
    if (!(domain_.a < domain_.b)) {
      throw ParameterError("interval domain requires a < b");
    }
    center_ = 0.5 * (domain_.a + domain_.b);
    half_length_ = 0.5 * (domain_.b - domain_.a);
  }
}

Complex ConformalMap::to_unit(Complex z) const {
  return (z - center_) / half_length_;
}

Complex ConformalMap::from_unit(Complex u) const {
  return center_ + half_length_ * u;
}

Complex ConformalMap::phi(Complex z) const {
  if (domain_.kind == DomainKind::unit_disk) {
    if (std::abs(z) < 1.0 - 1e-14) {
      throw DomainError("phi: point lies strictly inside the unit disk");
    }
    return z;
  }
  const Complex u = to_unit(z);
  // sqrt(u-1)*sqrt(u+1) is the branch of sqrt(u^2-1) with cut [-1,1] that
  // behaves like u at infinity.
  Complex w = u + std::sqrt(u - 1.0) * std::sqrt(u + 1.0);
  if (std::abs(w) < 1.0) w = 1.0 / w;
  return w;
}

double ConformalMap::modulus(Complex z) const {
  if (domain_.kind == DomainKind::unit_disk) return std::max(1.0, std::abs(z));
  return std::max(1.0, std::abs(phi(z)));
}

Complex ConformalMap::inverse(Complex w) const {
  if (domain_.kind == DomainKind::unit_disk) return w;
  return from_unit(0.5 * (w + 1.0 / w));
}

Complex ConformalMap::inverse_derivative(Complex w) const {
  if (domain_.kind == DomainKind::unit_disk) return 1.0;
  return half_length_ * 0.5 * (1.0 - 1.0 / (w * w));
}

std::vector<Complex> ConformalMap::level_curve(double rho, int count) const {
  if (!(rho > 1.0)) throw ParameterError("level_curve: rho must exceed 1");
  if (count <= 0) throw ParameterError("level_curve: count must be positive");
  std::vector<Complex> points;
  points.reserve(count);
  for (int j = 0; j < count; ++j) {
    const double theta = 2.0 * std::numbers::pi * j / count;
    points.push_back(inverse(std::polar(rho, theta)));
  }
  return points;
}

bool ConformalMap::in_canonical_domain(Complex z, double rho) const {
  if (!(rho > 1.0)) {
    throw ParameterError("in_canonical_domain: rho must exceed 1");
  }
  if (domain_.contains(z)) return true;
  return std::abs(phi(z)) < rho;
}

}  // namespace ohpade
