#include "ohpade/coefficients.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "ohpade/errors.hpp"
#include "ohpade/fit.hpp"

namespace ohpade {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxContourPoints = 1 << 16;
constexpr double kContourRelTol = 1e-12;

Complex ipow(Complex z, int k) {
  Complex r = 1.0;
  for (int i = 0; i < k; ++i) r *= z;
  return r;
}

}  // namespace

std::string to_string(CoeffMethod method) {
  return method == CoeffMethod::quadrature ? "quadrature" : "contour";
}

CoeffMethod coeff_method_from_string(const std::string& name) {
  if (name == "quadrature") return CoeffMethod::quadrature;
  if (name == "contour") return CoeffMethod::contour;
  throw ParameterError("unknown coefficient method '" + name + "'");
}

std::vector<CoeffValue> coeff_quadrature_all(const OrthoBasis& basis,
                                             const AnalyticFunction& g, int k, int count) {
  if (k < 0 || count < 0) throw ParameterError("coeff_quadrature: negative index");
  std::vector<CoeffValue> out(count);
  if (count == 0) return out;
  int points = 0;
  const auto sums = basis.integrate_many(
      [&](Complex t, std::span<Complex> dst) {
        const Complex gt = g(t) * ipow(t, k);
        const auto p = basis.eval_all(t, count);
        for (int n = 0; n < count; ++n) dst[n] = gt * std::conj(p[n]);
      },
      count, count + k + 8, &points);
  // Rounding scale of each sum, from the magnitudes on the accepted rule.
  std::vector<double> abs_sum(count, 0.0);
  const auto rule = basis.rule(points);
  for (std::size_t j = 0; j < rule->nodes.size(); ++j) {
    const Complex t = rule->nodes[j];
    const double gt = std::abs(g(t) * ipow(t, k)) * rule->weights[j];
    const auto p = basis.eval_all(t, count);
    for (int n = 0; n < count; ++n) abs_sum[n] += gt * std::abs(p[n]);
  }
  for (int n = 0; n < count; ++n) {
    out[n].value = sums[n];
    out[n].noise = 16.0 * kEps * abs_sum[n];
  }
  return out;
}

Complex coeff_quadrature(const OrthoBasis& basis, const AnalyticFunction& g, int k, int n) {
  if (n < 0 || n > basis.max_degree()) {
    throw ParameterError("coeff_quadrature: n exceeds the basis maximum degree");
  }
  return coeff_quadrature_all(basis, g, k, n + 1)[n].value;
}

double default_contour_rho(const OrthoBasis& basis, const AnalyticFunction& g, int n) {
  const double cap = basis.measure().domain.capacity();
  const double rho0 = g.rho0(basis.map());
  const double entire_rho = std::max(2.0, (n + 1.0) / cap);
  if (!std::isfinite(rho0)) return entire_rho;
  return std::min(1.0 + 0.85 * (rho0 - 1.0), std::max(2.0, (n + 2.0) / cap));
}

std::vector<CoeffValue> coeff_contour_shifts(const OrthoBasis& basis,
                                             const AnalyticFunction& g, int n,
                                             int max_shift, double rho) {
  if (n < 0 || max_shift < 0) throw ParameterError("coeff_contour: negative index");
  if (!(rho > 1.0)) throw ParameterError("coeff_contour: rho must exceed 1");
  const ConformalMap& map = basis.map();
  for (const auto& s : g.singularities()) {
    if (map.modulus(s.location) <= rho * (1.0 + 1e-3)) {
      throw ParameterError("coeff_contour: a singularity lies on or inside the level curve");
    }
  }
  const int shifts = max_shift + 1;
  std::vector<Complex> prev, cur(shifts);
  std::vector<double> abs_sum(shifts);
  int points = 8 * n + 64;
  while (true) {
    std::fill(cur.begin(), cur.end(), Complex(0.0));
    std::fill(abs_sum.begin(), abs_sum.end(), 0.0);
    for (int j = 0; j < points; ++j) {
      const Complex w = std::polar(rho, 2.0 * std::numbers::pi * j / points);
      const Complex z = map.inverse(w);
      const Complex s = basis.second_type_all(z, n + 1)[n];
      Complex term = g(z) * s * map.inverse_derivative(w) * w / static_cast<double>(points);
      for (int k = 0; k < shifts; ++k) {
        cur[k] += term;
        abs_sum[k] += std::abs(term);
        term *= z;
      }
    }
    if (!prev.empty()) {
      bool converged = true;
      double worst = 0.0;
      for (int k = 0; k < shifts; ++k) {
        const double delta = std::abs(cur[k] - prev[k]);
        const double noise = 16.0 * kEps * abs_sum[k];
        worst = std::max(worst, delta);
        if (delta > kContourRelTol * std::abs(cur[k]) + noise) converged = false;
      }
      if (converged) break;
      if (2 * points > kMaxContourPoints) {
        throw NumericError("coeff_contour: trapezoidal sums did not converge", worst);
      }
    }
    prev = cur;
    points *= 2;
  }
  std::vector<CoeffValue> out(shifts);
  for (int k = 0; k < shifts; ++k) {
    out[k].value = cur[k];
    out[k].noise = 16.0 * kEps * abs_sum[k];
  }
  return out;
}

Complex coeff_contour(const OrthoBasis& basis, const AnalyticFunction& g, int n, double rho) {
  return coeff_contour_shifts(basis, g, n, 0, rho)[0].value;
}

RadiusEstimate radius_from_coeffs(std::span<const Complex> coeffs, int n_lo, int n_hi,
                                  double floor, double ceiling) {
  if (n_lo < 0 || n_hi < n_lo || n_hi >= static_cast<int>(coeffs.size())) {
    throw ParameterError("radius_from_coeffs: window outside the computed range");
  }
  std::vector<double> x, y;
  bool all_below = true;
  for (int n = n_lo; n <= n_hi; ++n) {
    const double a = std::abs(coeffs[n]);
    if (a >= floor) all_below = false;
    if (a >= floor && a <= ceiling && a > 0.0) {
      x.push_back(n);
      y.push_back(std::log(a));
    }
  }
  RadiusEstimate est;
  if (all_below) {
    est.infinite = true;
    est.rho0 = std::numeric_limits<double>::infinity();
    return est;
  }
  if (x.size() < 8) {
    throw InsufficientDataError("radius_from_coeffs: fewer than 8 usable coefficients");
  }
  const LinearFit fit = linear_fit(x, y);
  est.points = fit.points;
  est.slope = fit.slope;
  est.rho0 = std::exp(-fit.slope);
  return est;
}

RadiusEstimate radius_from_coeffs(std::span<const Complex> coeffs, double floor) {
  const int hi = static_cast<int>(coeffs.size()) - 1;
  return radius_from_coeffs(coeffs, std::min(5, std::max(hi, 0)), hi, floor);
}

CoeffTable::CoeffTable(std::shared_ptr<const OrthoBasis> basis, AnalyticFunction g,
                       CoeffMethod method)
    : basis_(std::move(basis)), g_(std::move(g)), method_(method) {
  if (!basis_) throw ParameterError("CoeffTable: null basis");
  g_.validate(basis_->measure().domain);
}

void CoeffTable::ensure(int max_shift, int max_index) {
  if (max_shift < 0 || max_index < 0) throw ParameterError("CoeffTable: negative extent");
  const int old_k = this->max_shift();
  const int old_n = max_index_;
  const int new_k = std::max(old_k, max_shift);
  const int new_n = std::max(old_n, max_index);
  if (new_k == old_k && new_n == old_n) return;
  values_.resize(new_k + 1);
  for (auto& row : values_) row.resize(new_n + 1);
  if (method_ == CoeffMethod::quadrature) {
    for (int k = 0; k <= new_k; ++k) {
      if (k <= old_k && new_n == old_n) continue;
      values_[k] = coeff_quadrature_all(*basis_, g_, k, new_n + 1);
    }
  } else {
    for (int n = 0; n <= new_n; ++n) {
      if (n <= old_n && new_k == old_k) continue;
      const auto col =
          coeff_contour_shifts(*basis_, g_, n, new_k, default_contour_rho(*basis_, g_, n));
      for (int k = 0; k <= new_k; ++k) values_[k][n] = col[k];
    }
  }
  max_index_ = new_n;
}

bool CoeffTable::covers(int k, int n) const {
  return k >= 0 && n >= 0 && k <= max_shift() && n <= max_index_;
}

Complex CoeffTable::at(int k, int n) const {
  if (!covers(k, n)) throw ParameterError("CoeffTable: entry not computed");
  return values_[k][n].value;
}

double CoeffTable::noise(int k, int n) const {
  if (!covers(k, n)) throw ParameterError("CoeffTable: entry not computed");
  return values_[k][n].noise;
}

std::vector<Complex> CoeffTable::row(int k) const {
  if (k < 0 || k > max_shift()) throw ParameterError("CoeffTable: shift not computed");
  std::vector<Complex> out;
  out.reserve(values_[k].size());
  for (const auto& v : values_[k]) out.push_back(v.value);
  return out;
}

}  // namespace ohpade
