#pragma once

// Scalar-generic kernels for measures on [-1, 1] described by the
// orthonormal three-term recurrence
//
//   x p_n(x) = b_{n+1} p_{n+1}(x) + a_n p_n(x) + b_n p_{n-1}(x),  p_0 = 1/b_0,
//
// where b_0 = sqrt(μ([-1,1])). Everything here is templated on the real
// type so the same code runs in long double (or a multiprecision type with
// Eigen support) when an oracle needs more digits than binary64.

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <stdexcept>
#include <vector>

namespace ohpade {

template <class Real>
struct Recurrence {
  std::vector<Real> a;  // a_0 .. a_{size-1}
  std::vector<Real> b;  // b_0 .. b_{size-1}

  int size() const { return static_cast<int>(a.size()); }
};

template <class Real>
struct GaussRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

// Jacobi weight (1-x)^alpha (1+x)^beta normalized to unit mass.
template <class Real>
Recurrence<Real> jacobi_recurrence(Real alpha, Real beta, int count) {
  using std::sqrt;
  if (!(alpha > Real(-1)) || !(beta > Real(-1))) {
    throw std::invalid_argument("jacobi_recurrence: alpha, beta must exceed -1");
  }
  Recurrence<Real> rec;
  rec.a.resize(count);
  rec.b.resize(count);
  const Real s = alpha + beta;
  for (int n = 0; n < count; ++n) {
    const Real nn = Real(n);
    if (n == 0) {
      rec.a[0] = (beta - alpha) / (s + Real(2));
      rec.b[0] = Real(1);
      continue;
    }
    const Real t = Real(2) * nn + s;
    rec.a[n] = (beta * beta - alpha * alpha) / (t * (t + Real(2)));
    Real beta_n;
    if (n == 1) {
      beta_n = Real(4) * (Real(1) + alpha) * (Real(1) + beta) /
               ((Real(2) + s) * (Real(2) + s) * (Real(3) + s));
    } else {
      beta_n = Real(4) * nn * (nn + alpha) * (nn + beta) * (nn + s) /
               (t * t * (t + Real(1)) * (t - Real(1)));
    }
    rec.b[n] = sqrt(beta_n);
  }
  return rec;
}

// Discretized Stieltjes procedure: recurrence coefficients of the discrete
// measure sum_i w_i δ(x - x_i). Used for weights without closed forms and
// as an independent check of the closed forms.
template <class Real>
Recurrence<Real> stieltjes_recurrence(std::span<const Real> nodes,
                                      std::span<const Real> weights,
                                      int count) {
  using std::sqrt;
  const std::size_t m = nodes.size();
  if (weights.size() != m || count < 1 || static_cast<std::size_t>(count) > m) {
    throw std::invalid_argument("stieltjes_recurrence: bad discretization");
  }
  Recurrence<Real> rec;
  rec.a.resize(count);
  rec.b.resize(count);
  Real mass = 0;
  for (const Real& w : weights) mass += w;
  rec.b[0] = sqrt(mass);
  std::vector<Real> prev(m, Real(0)), cur(m, Real(1) / rec.b[0]), next(m);
  for (int n = 0; n < count; ++n) {
    Real an = 0;
    for (std::size_t i = 0; i < m; ++i) an += weights[i] * nodes[i] * cur[i] * cur[i];
    rec.a[n] = an;
    if (n + 1 == count) break;
    Real norm2 = 0;
    for (std::size_t i = 0; i < m; ++i) {
      next[i] = (nodes[i] - an) * cur[i] - rec.b[n] * prev[i] * (n > 0 ? Real(1) : Real(0));
      norm2 += weights[i] * next[i] * next[i];
    }
    rec.b[n + 1] = sqrt(norm2);
    for (std::size_t i = 0; i < m; ++i) {
      prev[i] = cur[i];
      cur[i] = next[i] / rec.b[n + 1];
    }
  }
  return rec;
}

// p_0(x) .. p_{out.size()-1}(x) by forward recurrence (the dominant solution
// off the support, so forward evaluation is stable there).
template <class Real, class Scalar>
void orthonormal_values(const Recurrence<Real>& rec, Scalar x, std::span<Scalar> out) {
  const int count = static_cast<int>(out.size());
  if (count == 0) return;
  if (count > rec.size()) {
    throw std::out_of_range("orthonormal_values: recurrence too short");
  }
  out[0] = Scalar(Real(1) / rec.b[0]);
  if (count == 1) return;
  out[1] = (x - rec.a[0]) * out[0] / rec.b[1];
  for (int n = 1; n + 1 < count; ++n) {
    out[n + 1] = ((x - rec.a[n]) * out[n] - rec.b[n] * out[n - 1]) / rec.b[n + 1];
  }
}

// Gauss rule with `points` nodes: Golub–Welsch eigenvalues, Newton polish on
// p_points, Christoffel-function weights w_j = 1 / sum_{k<points} p_k(x_j)^2.
template <class Real>
GaussRule<Real> gauss_rule(const Recurrence<Real>& rec, int points) {
  using std::abs;
  if (points < 1 || points + 1 > rec.size()) {
    throw std::out_of_range("gauss_rule: recurrence too short for requested size");
  }
  using Vec = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
  using Mat = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>;
  Vec diag(points);
  Vec sub(std::max(points - 1, 0));
  for (int i = 0; i < points; ++i) diag(i) = rec.a[i];
  for (int i = 0; i + 1 < points; ++i) sub(i) = rec.b[i + 1];
  Eigen::SelfAdjointEigenSolver<Mat> solver;
  if (points == 1) {
    GaussRule<Real> rule;
    rule.nodes = {rec.a[0]};
    rule.weights = {rec.b[0] * rec.b[0]};
    return rule;
  }
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("gauss_rule: tridiagonal eigensolver failed");
  }
  GaussRule<Real> rule;
  rule.nodes.resize(points);
  rule.weights.resize(points);
  std::vector<Real> p(points + 1);
  for (int j = 0; j < points; ++j) {
    Real x = solver.eigenvalues()(j);
    for (int it = 0; it < 3; ++it) {
      Real pm1 = 0, pc = Real(1) / rec.b[0];
      Real dm1 = 0, dc = 0;
      for (int n = 0; n < points; ++n) {
        const Real pn = ((x - rec.a[n]) * pc - (n > 0 ? rec.b[n] * pm1 : Real(0))) / rec.b[n + 1];
        const Real dn = ((x - rec.a[n]) * dc + pc - (n > 0 ? rec.b[n] * dm1 : Real(0))) / rec.b[n + 1];
        pm1 = pc;
        pc = pn;
        dm1 = dc;
        dc = dn;
      }
      if (dc == Real(0)) break;
      const Real step = pc / dc;
      x -= step;
      if (abs(step) <= std::numeric_limits<Real>::epsilon() * (Real(1) + abs(x))) break;
    }
    rule.nodes[j] = x;
    orthonormal_values<Real, Real>(rec, x, std::span<Real>(p.data(), points));
    Real sum = 0;
    for (int k = 0; k < points; ++k) sum += p[k] * p[k];
    rule.weights[j] = Real(1) / sum;
  }
  return rule;
}

// Second-kind functions s_n(x) = ∫ p_n(t) / (x - t) dμ(t) for n < out.size(),
// x off the support. They are the minimal solution of the same recurrence,
// so the ratios s_n / s_{n-1} come from a backward continued fraction
// started at index `start` (which must satisfy start < rec.size()).
template <class Real>
void second_kind_values(const Recurrence<Real>& rec, std::complex<Real> x,
                        std::span<std::complex<Real>> out, int start) {
  using C = std::complex<Real>;
  const int count = static_cast<int>(out.size());
  if (count == 0) return;
  if (start < count || start >= rec.size()) {
    throw std::out_of_range("second_kind_values: bad backward start index");
  }
  std::vector<C> ratio(count + 1);
  C r = C(0);  // r_{start+1}
  for (int n = start; n >= 1; --n) {
    r = rec.b[n] / (x - rec.a[n] - (n + 1 < rec.size() ? rec.b[n + 1] : Real(0)) * r);
    if (n <= count) ratio[n] = r;
  }
  const C s0 = rec.b[0] / (x - rec.a[0] - (rec.size() > 1 ? rec.b[1] : Real(0)) * r);
  out[0] = s0;
  for (int n = 1; n < count; ++n) out[n] = out[n - 1] * ratio[n];
}

}  // namespace ohpade
