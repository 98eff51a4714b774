#include "ohpade/ortho_basis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ohpade/errors.hpp"

namespace ohpade {

namespace {

struct JacobiParams {
  double alpha;
  double beta;
};

JacobiParams jacobi_params(const MeasureSpec& m) {
  switch (m.weight) {
    case WeightKind::chebyshev: return {-0.5, -0.5};
    case WeightKind::legendre: return {0.0, 0.0};
    case WeightKind::jacobi: return {m.alpha, m.beta};
    case WeightKind::circle_lebesgue: break;
  }
  return {0.0, 0.0};
}

constexpr int kRecurrenceReserve = 512;

}  // namespace

std::string to_string(WeightKind kind) {
  switch (kind) {
    case WeightKind::circle_lebesgue: return "circle_lebesgue";
    case WeightKind::chebyshev: return "chebyshev";
    case WeightKind::legendre: return "legendre";
    case WeightKind::jacobi: return "jacobi";
  }
  return "unknown";
}

WeightKind weight_kind_from_string(const std::string& name) {
  if (name == "circle_lebesgue" || name == "circle") return WeightKind::circle_lebesgue;
  if (name == "chebyshev") return WeightKind::chebyshev;
  if (name == "legendre") return WeightKind::legendre;
  if (name == "jacobi") return WeightKind::jacobi;
  throw ParameterError("unknown weight kind '" + name + "'");
}

MeasureSpec MeasureSpec::circle() { return MeasureSpec{}; }

MeasureSpec MeasureSpec::chebyshev(Domain interval) {
  MeasureSpec m;
  m.domain = interval;
  m.weight = WeightKind::chebyshev;
  return m;
}

MeasureSpec MeasureSpec::legendre(Domain interval) {
  MeasureSpec m;
  m.domain = interval;
  m.weight = WeightKind::legendre;
  return m;
}

MeasureSpec MeasureSpec::jacobi(double alpha, double beta, Domain interval) {
  MeasureSpec m;
  m.domain = interval;
  m.weight = WeightKind::jacobi;
  m.alpha = alpha;
  m.beta = beta;
  return m;
}

void MeasureSpec::validate() const {
  const bool circle = weight == WeightKind::circle_lebesgue;
  if (circle && domain.kind != DomainKind::unit_disk) {
    throw ParameterError("circle_lebesgue weight requires the unit_disk domain");
  }
  if (!circle && domain.kind != DomainKind::interval) {
    throw ParameterError(to_string(weight) + " weight requires an interval domain");
  }
  if (domain.kind == DomainKind::interval && !(domain.a < domain.b)) {
    throw ParameterError("interval domain requires a < b");
  }
  if (weight == WeightKind::jacobi && (!(alpha > -1.0) || !(beta > -1.0))) {
    throw ParameterError("jacobi exponents must exceed -1");
  }
  if (!(oversampling >= 1.0)) throw ParameterError("oversampling must be >= 1");
  if (!(quad_tol > 0.0)) throw ParameterError("quad_tol must be positive");
}

std::string MeasureSpec::describe() const {
  std::ostringstream os;
  os << to_string(weight);
  if (weight == WeightKind::jacobi) os << "(" << alpha << ", " << beta << ")";
  os << " on " << domain.describe();
  return os.str();
}

OrthoBasis::OrthoBasis(const OrthoBasis& other)
    : measure_(other.measure_),
      map_(other.map_),
      max_degree_(other.max_degree_),
      kappa_(other.kappa_),
      rec_(other.rec_),
      ortho_residual_(other.ortho_residual_) {
  std::lock_guard lock(other.cache_mutex_);
  rules_ = other.rules_;
}

OrthoBasis::OrthoBasis(OrthoBasis&& other) noexcept
    : measure_(std::move(other.measure_)),
      map_(other.map_),
      max_degree_(other.max_degree_),
      kappa_(std::move(other.kappa_)),
      rec_(std::move(other.rec_)),
      ortho_residual_(other.ortho_residual_),
      rules_(std::move(other.rules_)) {}

OrthoBasis& OrthoBasis::operator=(const OrthoBasis& other) {
  if (this == &other) return *this;
  OrthoBasis copy(other);
  *this = std::move(copy);
  return *this;
}

OrthoBasis& OrthoBasis::operator=(OrthoBasis&& other) noexcept {
  measure_ = std::move(other.measure_);
  map_ = other.map_;
  max_degree_ = other.max_degree_;
  kappa_ = std::move(other.kappa_);
  rec_ = std::move(other.rec_);
  ortho_residual_ = other.ortho_residual_;
  rules_ = std::move(other.rules_);
  return *this;
}

OrthoBasis::~OrthoBasis() = default;

OrthoBasis OrthoBasis::build(const MeasureSpec& measure, int max_degree) {
  measure.validate();
  if (max_degree < 0) throw ParameterError("build_basis: N must be >= 0");
  OrthoBasis basis;
  basis.measure_ = measure;
  basis.map_ = ConformalMap(measure.domain);
  basis.max_degree_ = max_degree;
  basis.kappa_.assign(max_degree + 1, 1.0);
  if (!basis.on_circle()) {
    const auto [alpha, beta] = jacobi_params(measure);
    basis.rec_ = jacobi_recurrence<double>(alpha, beta, max_degree + kRecurrenceReserve);
    const double h = 0.5 * (measure.domain.b - measure.domain.a);
    for (int n = 1; n <= max_degree; ++n) {
      basis.kappa_[n] = basis.kappa_[n - 1] / (basis.rec_.b[n] * h);
    }
  }
  basis.ortho_residual_ = basis.orthonormality_check();
  return basis;
}

double OrthoBasis::kappa(int n) const {
  if (n < 0 || n > max_degree_) throw ParameterError("kappa: index out of range");
  return kappa_[n];
}

Recurrence<double> OrthoBasis::recurrence_for(int size) const {
  const auto [alpha, beta] = jacobi_params(measure_);
  return jacobi_recurrence<double>(alpha, beta, size);
}

Complex OrthoBasis::to_reference(Complex z) const {
  const double c = 0.5 * (measure_.domain.a + measure_.domain.b);
  const double h = 0.5 * (measure_.domain.b - measure_.domain.a);
  return (z - c) / h;
}

Complex OrthoBasis::eval(int n, Complex z) const {
  if (n < 0 || n > max_degree_) {
    throw ParameterError("eval_p: degree exceeds the basis maximum");
  }
  return eval_all(z, n + 1)[n];
}

std::vector<Complex> OrthoBasis::eval_all(Complex z, int count) const {
  std::vector<Complex> out(std::max(count, 0));
  if (count <= 0) return out;
  if (on_circle()) {
    out[0] = 1.0;
    for (int n = 1; n < count; ++n) out[n] = out[n - 1] * z;
    return out;
  }
  const Complex u = to_reference(z);
  if (count <= rec_.size()) {
    orthonormal_values<double, Complex>(rec_, u, out);
  } else {
    orthonormal_values<double, Complex>(recurrence_for(count), u, out);
  }
  return out;
}

double OrthoBasis::support_cutoff() const { return 1e-3 * measure_.domain.diameter(); }

double OrthoBasis::distance_to_support(Complex z) const {
  if (on_circle()) return std::abs(std::abs(z) - 1.0);
  return measure_.domain.distance_to(z);
}

Complex OrthoBasis::second_type(int n, Complex z) const {
  if (n < 0) throw ParameterError("second_type: negative index");
  return second_type_all(z, n + 1)[n];
}

std::vector<Complex> OrthoBasis::second_type_all(Complex z, int count) const {
  if (distance_to_support(z) < support_cutoff()) {
    throw DomainError("second_type: point too close to the support of the measure");
  }
  std::vector<Complex> out(std::max(count, 0));
  if (count <= 0) return out;
  if (on_circle()) {
    if (std::abs(z) < 1.0) return out;  // identically zero inside the disk
    const Complex inv = 1.0 / z;
    out[0] = inv;
    for (int n = 1; n < count; ++n) out[n] = out[n - 1] * inv;
    return out;
  }
  const double modulus = map_.modulus(z);
  const double log_mod = std::log(modulus);
  const int start = count + 10 + static_cast<int>(std::ceil(20.0 / log_mod));
  const Complex u = to_reference(z);
  if (start < rec_.size()) {
    second_kind_values<double>(rec_, u, out, start);
  } else {
    second_kind_values<double>(recurrence_for(start + 2), u, out, start);
  }
  const double h = 0.5 * (measure_.domain.b - measure_.domain.a);
  for (auto& s : out) s /= h;
  return out;
}

Complex OrthoBasis::second_type_quadrature(int n, Complex z) const {
  if (distance_to_support(z) < support_cutoff()) {
    throw DomainError("second_type: point too close to the support of the measure");
  }
  return integrate(
      [&](Complex t) { return std::conj(eval_all(t, n + 1)[n]) / (z - t); }, n + 16);
}

Complex OrthoBasis::cauchy_norm_integral(int n, Complex z) const {
  if (distance_to_support(z) < support_cutoff()) {
    throw DomainError("cauchy_norm_integral: point too close to the support");
  }
  return integrate(
      [&](Complex t) {
        const double p = std::abs(eval_all(t, n + 1)[n]);
        return p * p / (z - t);
      },
      2 * n + 16);
}

std::shared_ptr<const QuadratureRule> OrthoBasis::rule(int points) const {
  if (points < 1) throw ParameterError("quadrature rule needs at least one node");
  {
    std::lock_guard lock(cache_mutex_);
    auto it = rules_.find(points);
    if (it != rules_.end()) return it->second;
  }
  auto r = std::make_shared<QuadratureRule>();
  r->nodes.resize(points);
  r->weights.assign(points, 1.0 / points);
  if (on_circle()) {
    for (int j = 0; j < points; ++j) {
      r->nodes[j] = std::polar(1.0, 2.0 * std::numbers::pi * j / points);
    }
  } else {
    const double c = 0.5 * (measure_.domain.a + measure_.domain.b);
    const double h = 0.5 * (measure_.domain.b - measure_.domain.a);
    if (measure_.weight == WeightKind::chebyshev) {
      for (int j = 0; j < points; ++j) {
        const double x = std::cos((2.0 * j + 1.0) * std::numbers::pi / (2.0 * points));
        r->nodes[j] = c + h * x;
      }
    } else {
      const Recurrence<double> rec =
          points + 1 <= rec_.size() ? rec_ : recurrence_for(points + 1);
      const GaussRule<double> g = gauss_rule(rec, points);
      for (int j = 0; j < points; ++j) {
        r->nodes[j] = c + h * g.nodes[j];
        r->weights[j] = g.weights[j];
      }
    }
  }
  std::lock_guard lock(cache_mutex_);
  return rules_.emplace(points, std::move(r)).first->second;
}

int OrthoBasis::initial_points(int degree) const {
  const double target = measure_.oversampling * std::max(degree, 1);
  return std::max(8, static_cast<int>(std::ceil(target)));
}

Complex OrthoBasis::integrate(const std::function<Complex(Complex)>& f,
                              int degree_hint) const {
  const auto values = integrate_many(
      [&](Complex t, std::span<Complex> out) { out[0] = f(t); }, 1, degree_hint);
  return values[0];
}

std::vector<Complex> OrthoBasis::integrate_many(
    const std::function<void(Complex, std::span<Complex>)>& f, int count,
    int degree_hint, int* final_points) const {
  std::vector<Complex> prev, cur(count), scratch(count);
  int points = initial_points(degree_hint);
  double delta = 0.0;
  while (true) {
    const auto r = rule(points);
    std::fill(cur.begin(), cur.end(), Complex(0.0));
    for (std::size_t j = 0; j < r->nodes.size(); ++j) {
      f(r->nodes[j], scratch);
      for (int i = 0; i < count; ++i) cur[i] += r->weights[j] * scratch[i];
    }
    if (!prev.empty()) {
      delta = 0.0;
      double scale = 1.0;
      for (int i = 0; i < count; ++i) {
        delta = std::max(delta, std::abs(cur[i] - prev[i]));
        scale = std::max(scale, std::abs(cur[i]));
      }
      if (delta <= measure_.quad_tol * scale) {
        if (final_points) *final_points = points;
        return cur;
      }
    }
    if (2 * points > kMaxQuadraturePoints) {
      throw NumericError("quadrature did not converge under node doubling", delta);
    }
    prev = cur;
    points *= 2;
  }
}

double OrthoBasis::orthonormality_check() const {
  const int count = max_degree_ + 1;
  const auto gram = integrate_many(
      [&](Complex t, std::span<Complex> out) {
        const auto p = eval_all(t, count);
        for (int j = 0; j < count; ++j) {
          for (int k = 0; k < count; ++k) out[j * count + k] = p[j] * std::conj(p[k]);
        }
      },
      count * count, 2 * max_degree_);
  double residual = 0.0;
  for (int j = 0; j < count; ++j) {
    for (int k = 0; k < count; ++k) {
      const Complex target = j == k ? 1.0 : 0.0;
      residual = std::max(residual, std::abs(gram[j * count + k] - target));
    }
  }
  return residual;
}

std::vector<RegDiagnostic> OrthoBasis::reg_diagnostics(std::span<const Complex> probes,
                                                       std::span<const int> degrees) const {
  std::vector<RegDiagnostic> rows;
  for (const Complex z : probes) {
    int top = 0;
    for (int n : degrees) top = std::max(top, n);
    const auto p = eval_all(z, top + 1);
    const auto s = second_type_all(z, top + 1);
    const double phi_abs = map_.modulus(z);
    for (int n : degrees) {
      if (n <= 0) continue;
      RegDiagnostic row;
      row.z = z;
      row.n = n;
      row.p_root = std::pow(std::abs(p[n]), 1.0 / n);
      row.phi_abs = phi_abs;
      row.s_root = std::pow(std::abs(s[n]), 1.0 / n);
      row.phi_inv = 1.0 / phi_abs;
      rows.push_back(row);
    }
  }
  return rows;
}

double OrthoBasis::kappa_ratio(int n, int m) const {
  if (m < 0 || m > n || n > max_degree_) {
    throw ParameterError("kappa_ratio: requires 0 <= m <= n <= N");
  }
  return kappa_[n - m] / kappa_[n];
}

KappaEnvelope OrthoBasis::kappa_envelope(int m) const {
  if (m < 0 || m > max_degree_) throw ParameterError("kappa_envelope: m out of range");
  KappaEnvelope env;
  env.m = m;
  env.bound = std::pow(measure_.domain.sup_norm(), m);
  env.min_ratio = std::numeric_limits<double>::infinity();
  env.max_ratio = 0.0;
  for (int n = m; n <= max_degree_; ++n) {
    const double r = kappa_ratio(n, m);
    env.min_ratio = std::min(env.min_ratio, r);
    env.max_ratio = std::max(env.max_ratio, r);
  }
  const int mid = (m + max_degree_ + 1) / 2;
  if (max_degree_ - m >= 4) {
    env.degenerating = kappa_ratio(max_degree_, m) < 0.5 * kappa_ratio(mid, m);
  }
  return env;
}

}  // namespace ohpade
