#pragma once

#include <limits>
#include <memory>
#include <string>
#include <vector>

#include "ohpade/domain.hpp"

namespace ohpade {

enum class SingularityKind { pole, branch };

struct Singularity {
  Complex location;
  SingularityKind kind = SingularityKind::pole;
  int order = 1;  // pole order; 0 for branch points
};

struct Meromorphy {
  double rho = std::numeric_limits<double>::infinity();
  std::vector<Singularity> poles;  // poles of F inside D_rho
};

// Expression tree over a handful of primitives, holomorphic on a neighbourhood
// of E when validate() passes. Copies share the immutable tree.
//
// Branch primitives take a centre c (default 0) and are defined as
//   log(a - z)   := Log(a - c) + Log(1 - (z - c)/(a - c))
//   (a - z)^γ    := (a - c)^γ · (1 - (z - c)/(a - c))^γ
// so the cut is the ray from c through a, beyond a.
class AnalyticFunction {
 public:
  enum class Kind { pole, polynomial, exp, log, power, sum, product };

  struct Node {
    Kind kind = Kind::polynomial;
    Complex coeff = 1.0;
    Complex a = 0.0;       // pole, log, power
    int order = 1;         // pole
    Complex lambda = 0.0;  // exp
    Complex gamma = 0.0;   // power
    Complex center = 0.0;  // log, power
    std::vector<Complex> poly;  // ascending monomial coefficients
    std::vector<AnalyticFunction> children;
  };

  AnalyticFunction();  // the zero polynomial

  static AnalyticFunction pole(Complex a, int order = 1, Complex coeff = 1.0);
  static AnalyticFunction polynomial(std::vector<Complex> coeffs);
  static AnalyticFunction monomial(int k, Complex coeff = 1.0);
  static AnalyticFunction exp(Complex lambda = 1.0, Complex coeff = 1.0);
  static AnalyticFunction log(Complex a, Complex coeff = 1.0, Complex center = 0.0);
  static AnalyticFunction power(Complex a, Complex gamma, Complex coeff = 1.0,
                                Complex center = 0.0);
  static AnalyticFunction sum(std::vector<AnalyticFunction> terms);
  static AnalyticFunction product(std::vector<AnalyticFunction> factors);

  Kind kind() const { return node_->kind; }
  const Node& node() const { return *node_; }

  Complex operator()(Complex z) const;
  // Taylor coefficients at 0 (valid when 0 lies inside the disk of
  // holomorphy and branch centres are 0).
  std::vector<Complex> taylor(int count) const;

  // Finite singularities, merged by location.
  std::vector<Singularity> singularities() const;
  bool is_rational() const;
  bool is_entire() const { return singularities().empty(); }

  // ρ₀(F) = min |Φ(ξ)| over singularities; +inf for entire functions.
  double rho0(const ConformalMap& map) const;
  // ρ_m(F) and the poles (with order) of F inside D_{ρ_m(F)}.
  Meromorphy meromorphy(const ConformalMap& map, int m) const;

  // Throws DomainError if a singularity lies within `cutoff` of E or a branch
  // centre lies outside E (the cut would then be allowed to cross E).
  void validate(const Domain& domain, double cutoff = -1.0) const;

  AnalyticFunction times_z_power(int k) const;
  AnalyticFunction scaled(Complex c) const;
  AnalyticFunction operator+(const AnalyticFunction& other) const;
  AnalyticFunction operator*(const AnalyticFunction& other) const;

  std::string describe() const;

 private:
  explicit AnalyticFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  void collect_singularities(std::vector<Singularity>& out) const;

  std::shared_ptr<const Node> node_;
};

// Merge singularities closer than `tol`. Poles at a common point keep the
// largest order under `combine_max`, otherwise the orders add.
std::vector<Singularity> merge_singularities(std::vector<Singularity> in, bool combine_max,
                                             double tol = 1e-12);

}  // namespace ohpade
