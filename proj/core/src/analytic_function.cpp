#include "ohpade/analytic_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ohpade/errors.hpp"

namespace ohpade {

namespace {

using Node = AnalyticFunction::Node;
using Kind = AnalyticFunction::Kind;

bool is_nonnegative_integer(Complex g) {
  return g.imag() == 0.0 && g.real() >= 0.0 && std::floor(g.real()) == g.real();
}

bool is_negative_integer(Complex g) {
  return g.imag() == 0.0 && g.real() < 0.0 && std::floor(g.real()) == g.real();
}

std::string fmt(Complex c) {
  std::ostringstream os;
  if (c.imag() == 0.0) {
    os << c.real();
  } else {
    os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i)";
  }
  return os.str();
}

}  // namespace

std::vector<Singularity> merge_singularities(std::vector<Singularity> in, bool combine_max,
                                             double tol) {
  std::vector<Singularity> out;
  for (const auto& s : in) {
    auto it = std::find_if(out.begin(), out.end(), [&](const Singularity& o) {
      return std::abs(o.location - s.location) <= tol;
    });
    if (it == out.end()) {
      out.push_back(s);
      continue;
    }
    if (it->kind == SingularityKind::branch || s.kind == SingularityKind::branch) {
      it->kind = SingularityKind::branch;
      it->order = 0;
    } else {
      it->order = combine_max ? std::max(it->order, s.order) : it->order + s.order;
    }
  }
  std::sort(out.begin(), out.end(), [](const Singularity& x, const Singularity& y) {
    if (x.location.real() != y.location.real()) return x.location.real() < y.location.real();
    return x.location.imag() < y.location.imag();
  });
  return out;
}

AnalyticFunction::AnalyticFunction() {
  auto n = std::make_shared<Node>();
  n->kind = Kind::polynomial;
  n->poly = {0.0};
  node_ = std::move(n);
}

AnalyticFunction AnalyticFunction::pole(Complex a, int order, Complex coeff) {
  if (order < 1) throw ParameterError("pole order must be >= 1");
  auto n = std::make_shared<Node>();
  n->kind = Kind::pole;
  n->a = a;
  n->order = order;
  n->coeff = coeff;
  return AnalyticFunction(std::move(n));
}

AnalyticFunction AnalyticFunction::polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty()) coeffs.push_back(0.0);
  auto n = std::make_shared<Node>();
  n->kind = Kind::polynomial;
  n->poly = std::move(coeffs);
  return AnalyticFunction(std::move(n));
}

AnalyticFunction AnalyticFunction::monomial(int k, Complex coeff) {
  if (k < 0) throw ParameterError("monomial degree must be >= 0");
  std::vector<Complex> c(k + 1, 0.0);
  c[k] = coeff;
  return polynomial(std::move(c));
}

AnalyticFunction AnalyticFunction::exp(Complex lambda, Complex coeff) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::exp;
  n->lambda = lambda;
  n->coeff = coeff;
  return AnalyticFunction(std::move(n));
}

AnalyticFunction AnalyticFunction::log(Complex a, Complex coeff, Complex center) {
  if (a == center) throw ParameterError("log: branch point coincides with its centre");
  auto n = std::make_shared<Node>();
  n->kind = Kind::log;
  n->a = a;
  n->coeff = coeff;
  n->center = center;
  return AnalyticFunction(std::move(n));
}

AnalyticFunction AnalyticFunction::power(Complex a, Complex gamma, Complex coeff,
                                         Complex center) {
  if (a == center) throw ParameterError("power: branch point coincides with its centre");
  auto n = std::make_shared<Node>();
  n->kind = Kind::power;
  n->a = a;
  n->gamma = gamma;
  n->coeff = coeff;
  n->center = center;
  return AnalyticFunction(std::move(n));
}

AnalyticFunction AnalyticFunction::sum(std::vector<AnalyticFunction> terms) {
  if (terms.empty()) return AnalyticFunction();
  if (terms.size() == 1) return terms.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->children = std::move(terms);
  return AnalyticFunction(std::move(n));
}

AnalyticFunction AnalyticFunction::product(std::vector<AnalyticFunction> factors) {
  if (factors.empty()) return polynomial({1.0});
  if (factors.size() == 1) return factors.front();
  auto n = std::make_shared<Node>();
  n->kind = Kind::product;
  n->children = std::move(factors);
  return AnalyticFunction(std::move(n));
}

Complex AnalyticFunction::operator()(Complex z) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::pole: {
      Complex d = z - n.a;
      Complex p = d;
      for (int k = 1; k < n.order; ++k) p *= d;
      return n.coeff / p;
    }
    case Kind::polynomial: {
      Complex acc = 0.0;
      for (auto it = n.poly.rbegin(); it != n.poly.rend(); ++it) acc = acc * z + *it;
      return acc;
    }
    case Kind::exp:
      return n.coeff * std::exp(n.lambda * z);
    case Kind::log: {
      const Complex base = n.a - n.center;
      return n.coeff * (std::log(base) + std::log(1.0 - (z - n.center) / base));
    }
    case Kind::power: {
      const Complex base = n.a - n.center;
      return n.coeff * std::pow(base, n.gamma) *
             std::pow(1.0 - (z - n.center) / base, n.gamma);
    }
    case Kind::sum: {
      Complex acc = 0.0;
      for (const auto& c : n.children) acc += c(z);
      return acc;
    }
    case Kind::product: {
      Complex acc = 1.0;
      for (const auto& c : n.children) acc *= c(z);
      return acc;
    }
  }
  return 0.0;
}

std::vector<Complex> AnalyticFunction::taylor(int count) const {
  std::vector<Complex> t(std::max(count, 0), 0.0);
  if (count <= 0) return t;
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::pole: {
      // c/(z-a)^k = c(-a)^{-k} Σ C(j+k-1, k-1) (z/a)^j
      Complex term = n.coeff / std::pow(-n.a, n.order);
      t[0] = term;
      for (int j = 1; j < count; ++j) {
        term *= static_cast<double>(j + n.order - 1) / j / n.a;
        t[j] = term;
      }
      break;
    }
    case Kind::polynomial:
      for (int j = 0; j < count && j < static_cast<int>(n.poly.size()); ++j) t[j] = n.poly[j];
      break;
    case Kind::exp: {
      Complex term = n.coeff;
      t[0] = term;
      for (int j = 1; j < count; ++j) {
        term *= n.lambda / static_cast<double>(j);
        t[j] = term;
      }
      break;
    }
    case Kind::log: {
      t[0] = (*this)(0.0);
      Complex inv_pow = 1.0;
      for (int j = 1; j < count; ++j) {
        inv_pow /= n.a;
        t[j] = -n.coeff * inv_pow / static_cast<double>(j);
      }
      break;
    }
    case Kind::power: {
      // (a - z)^γ = (a - z)^γ|_0 · (1 - z/a)^γ
      Complex term = (*this)(0.0);
      t[0] = term;
      for (int j = 1; j < count; ++j) {
        term *= (n.gamma - static_cast<double>(j - 1)) / static_cast<double>(j) * (-1.0 / n.a);
        t[j] = term;
      }
      break;
    }
    case Kind::sum:
      for (const auto& c : n.children) {
        const auto ct = c.taylor(count);
        for (int j = 0; j < count; ++j) t[j] += ct[j];
      }
      break;
    case Kind::product: {
      t[0] = 1.0;
      for (const auto& c : n.children) {
        const auto ct = c.taylor(count);
        std::vector<Complex> next(count, 0.0);
        for (int i = 0; i < count; ++i) {
          if (t[i] == 0.0) continue;
          for (int j = 0; i + j < count; ++j) next[i + j] += t[i] * ct[j];
        }
        t = std::move(next);
      }
      break;
    }
  }
  return t;
}

void AnalyticFunction::collect_singularities(std::vector<Singularity>& out) const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::pole:
      out.push_back({n.a, SingularityKind::pole, n.order});
      break;
    case Kind::log:
      out.push_back({n.a, SingularityKind::branch, 0});
      break;
    case Kind::power:
      if (is_nonnegative_integer(n.gamma)) break;
      if (is_negative_integer(n.gamma)) {
        out.push_back({n.a, SingularityKind::pole, static_cast<int>(-n.gamma.real())});
      } else {
        out.push_back({n.a, SingularityKind::branch, 0});
      }
      break;
    case Kind::polynomial:
    case Kind::exp:
      break;
    case Kind::sum: {
      std::vector<Singularity> all;
      for (const auto& c : n.children) c.collect_singularities(all);
      for (auto& s : merge_singularities(std::move(all), true)) out.push_back(s);
      break;
    }
    case Kind::product: {
      std::vector<Singularity> all;
      for (const auto& c : n.children) {
        for (auto& s : c.singularities()) all.push_back(s);
      }
      for (auto& s : merge_singularities(std::move(all), false)) out.push_back(s);
      break;
    }
  }
}

std::vector<Singularity> AnalyticFunction::singularities() const {
  std::vector<Singularity> out;
  collect_singularities(out);
  return merge_singularities(std::move(out), true);
}

bool AnalyticFunction::is_rational() const {
  const Node& n = *node_;
  switch (n.kind) {
    case Kind::pole:
    case Kind::polynomial:
      return true;
    case Kind::power:
      return n.gamma.imag() == 0.0 && std::floor(n.gamma.real()) == n.gamma.real();
    case Kind::exp:
      return n.lambda == 0.0;
    case Kind::log:
      return false;
    case Kind::sum:
    case Kind::product:
      return std::all_of(n.children.begin(), n.children.end(),
                         [](const AnalyticFunction& c) { return c.is_rational(); });
  }
  return false;
}

double AnalyticFunction::rho0(const ConformalMap& map) const {
  double rho = std::numeric_limits<double>::infinity();
  for (const auto& s : singularities()) rho = std::min(rho, map.modulus(s.location));
  return rho;
}

Meromorphy AnalyticFunction::meromorphy(const ConformalMap& map, int m) const {
  auto sing = singularities();
  std::sort(sing.begin(), sing.end(), [&](const Singularity& x, const Singularity& y) {
    return map.modulus(x.location) < map.modulus(y.location);
  });
  Meromorphy out;
  int used = 0;
  std::size_t i = 0;
  while (i < sing.size()) {
    const double level = map.modulus(sing[i].location);
    std::size_t j = i;
    bool blocked = false;
    int orders = 0;
    while (j < sing.size() && std::abs(map.modulus(sing[j].location) - level) <= 1e-12 * level) {
      if (sing[j].kind == SingularityKind::branch) blocked = true;
      orders += sing[j].order;
      ++j;
    }
    if (blocked || used + orders > m) {
      out.rho = level;
      return out;
    }
    for (std::size_t k = i; k < j; ++k) out.poles.push_back(sing[k]);
    used += orders;
    i = j;
  }
  return out;
}

void AnalyticFunction::validate(const Domain& domain, double cutoff) const {
  if (cutoff < 0.0) cutoff = 1e-3 * domain.diameter();
  for (const auto& s : singularities()) {
    if (domain.distance_to(s.location) <= cutoff) {
      throw DomainError("function has a singularity on or too close to E at " +
                        fmt(s.location));
    }
  }
  std::vector<const Node*> stack{node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    if ((n->kind == Kind::log || n->kind == Kind::power) &&
        !domain.contains(n->center, 1e-12)) {
      throw DomainError("branch centre " + fmt(n->center) + " must lie in E");
    }
    for (const auto& c : n->children) stack.push_back(c.node_.get());
  }
}

AnalyticFunction AnalyticFunction::times_z_power(int k) const {
  if (k < 0) throw ParameterError("times_z_power: k must be >= 0");
  if (k == 0) return *this;
  return product({monomial(k), *this});
}

AnalyticFunction AnalyticFunction::scaled(Complex c) const {
  return product({polynomial({c}), *this});
}

AnalyticFunction AnalyticFunction::operator+(const AnalyticFunction& other) const {
  return sum({*this, other});
}

AnalyticFunction AnalyticFunction::operator*(const AnalyticFunction& other) const {
  return product({*this, other});
}

std::string AnalyticFunction::describe() const {
  const Node& n = *node_;
  std::ostringstream os;
  auto prefix = [&](Complex c) {
    if (c != 1.0) os << fmt(c) << "*";
  };
  switch (n.kind) {
    case Kind::pole:
      prefix(n.coeff);
      os << "1/(z-" << fmt(n.a) << ")";
      if (n.order > 1) os << "^" << n.order;
      break;
    case Kind::polynomial: {
      bool first = true;
      for (std::size_t j = 0; j < n.poly.size(); ++j) {
        if (n.poly[j] == 0.0 && !(n.poly.size() == 1)) continue;
        if (!first) os << " + ";
        first = false;
        os << fmt(n.poly[j]);
        if (j >= 1) os << "*z";
        if (j >= 2) os << "^" << j;
      }
      break;
    }
    case Kind::exp:
      prefix(n.coeff);
      os << "exp(" << fmt(n.lambda) << "*z)";
      break;
    case Kind::log:
      prefix(n.coeff);
      os << "log(" << fmt(n.a) << "-z)";
      break;
    case Kind::power:
      prefix(n.coeff);
      os << "(" << fmt(n.a) << "-z)^" << fmt(n.gamma);
      break;
    case Kind::sum:
      for (std::size_t j = 0; j < n.children.size(); ++j) {
        if (j) os << " + ";
        os << n.children[j].describe();
      }
      break;
    case Kind::product:
      for (std::size_t j = 0; j < n.children.size(); ++j) {
        if (j) os << " * ";
        os << "[" << n.children[j].describe() << "]";
      }
      break;
  }
  return os.str();
}

}  // namespace ohpade
