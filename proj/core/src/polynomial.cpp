#include "ohpade/polynomial.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ohpade/errors.hpp"

namespace ohpade {

Complex poly_eval(std::span<const Complex> p, Complex z) {
  Complex acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + *it;
  return acc;
}

Poly poly_from_roots(std::span<const Complex> roots) {
  Poly p{1.0};
  for (const Complex r : roots) {
    const Complex factor[2] = {-r, 1.0};
    p = poly_mul(p, factor);
  }
  return p;
}

Poly poly_mul(std::span<const Complex> a, std::span<const Complex> b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

int poly_degree(std::span<const Complex> p, double tol) {
  double scale = 0.0;
  for (const Complex c : p) scale = std::max(scale, std::abs(c));
  for (int d = static_cast<int>(p.size()) - 1; d >= 0; --d) {
    if (std::abs(p[d]) > tol * scale && p[d] != 0.0) return d;
  }
  return 0;
}

double coeff_distance(std::span<const Complex> a, std::span<const Complex> b) {
  const std::size_t n = std::max(a.size(), b.size());
  double d = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex x = j < a.size() ? a[j] : 0.0;
    const Complex y = j < b.size() ? b[j] : 0.0;
    d = std::max(d, std::abs(x - y));
  }
  return d;
}

namespace {

// Parlett–Reinsch balancing with radix-2 scaling, in place.
void balance(Eigen::MatrixXcd& a) {
  const int n = static_cast<int>(a.rows());
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        c += std::abs(a(j, i));
        r += std::abs(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      double g = r / 2.0;
      double f = 1.0;
      const double s = c + r;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c >= g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

}  // namespace

std::vector<Root> roots(std::span<const Complex> p, double cluster_radius) {
  const int deg = poly_degree(p);
  if (deg <= 0) return {};
  // Zeros at the origin are peeled off exactly.
  int low = 0;
  while (low < deg && p[low] == 0.0) ++low;
  std::vector<Complex> raw(low, Complex(0.0));
  const int m = deg - low;
  if (m > 0) {
    const Complex lead = p[deg];
    Eigen::MatrixXcd c = Eigen::MatrixXcd::Zero(m, m);
    for (int i = 1; i < m; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < m; ++i) c(i, m - 1) = -p[low + i] / lead;
    balance(c);
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(c, false);
    if (solver.info() != Eigen::Success) {
      throw NumericError("roots: companion eigensolver failed");
    }
    for (int i = 0; i < m; ++i) {
      Complex z = solver.eigenvalues()(i);
      // Newton polish on the original polynomial, kept only if it helps.
      for (int it = 0; it < 3; ++it) {
        Complex f = 0.0, df = 0.0;
        for (int k = deg; k >= 0; --k) {
          df = df * z + f;
          f = f * z + p[k];
        }
        if (df == 0.0) break;
        const Complex next = z - f / df;
        if (!(std::abs(poly_eval(p, next)) < std::abs(f))) break;
        z = next;
      }
      raw.push_back(z);
    }
  }
  // Single-linkage clustering.
  const int count = static_cast<int>(raw.size());
  std::vector<int> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < count; ++i) {
    for (int j = i + 1; j < count; ++j) {
      if (std::abs(raw[i] - raw[j]) <= cluster_radius) parent[find(i)] = find(j);
    }
  }
  std::vector<Root> out;
  std::vector<int> slot(count, -1);
  for (int i = 0; i < count; ++i) {
    const int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.push_back({raw[i], 1});
    } else {
      Root& root = out[slot[r]];
      root.z = (root.z * static_cast<double>(root.multiplicity) + raw[i]) /
               static_cast<double>(root.multiplicity + 1);
      ++root.multiplicity;
    }
  }
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (a.z.real() != b.z.real()) return a.z.real() < b.z.real();
    return a.z.imag() < b.z.imag();
  });
  return out;
}

std::vector<Complex> root_list(std::span<const Complex> p, double cluster_radius) {
  std::vector<Complex> out;
  for (const auto& r : roots(p, cluster_radius)) {
    for (int k = 0; k < r.multiplicity; ++k) out.push_back(r.z);
  }
  return out;
}

std::vector<double> match_distances(std::span<const Complex> targets,
                                    std::span<const Complex> candidates) {
  const std::size_t t = targets.size();
  const std::size_t c = candidates.size();
  std::vector<double> best(t, std::numeric_limits<double>::infinity());
  if (t == 0 || c < t) return best;
  double best_max = std::numeric_limits<double>::infinity();
  double best_sum = std::numeric_limits<double>::infinity();
  std::vector<int> pick(t);
  std::vector<bool> used(c, false);
  auto recurse = [&](auto&& self, std::size_t i, double cur_max, double cur_sum) -> void {
    if (cur_max > best_max) return;
    if (i == t) {
      if (cur_max < best_max || (cur_max == best_max && cur_sum < best_sum)) {
        best_max = cur_max;
        best_sum = cur_sum;
        for (std::size_t k = 0; k < t; ++k) {
          best[k] = std::abs(targets[k] - candidates[pick[k]]);
        }
      }
      return;
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (used[j]) continue;
      used[j] = true;
      pick[i] = static_cast<int>(j);
      const double d = std::abs(targets[i] - candidates[j]);
      self(self, i + 1, std::max(cur_max, d), cur_sum + d);
      used[j] = false;
    }
  };
  recurse(recurse, 0, 0.0, 0.0);
  return best;
}

}  // namespace ohpade
