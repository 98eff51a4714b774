#include "ohpade/independence.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <utility>

#include "ohpade/errors.hpp"

namespace ohpade {

namespace {

using Rational = boost::multiprecision::cpp_rational;

struct GaussQ {
  Rational re;
  Rational im;

  static GaussQ from(Complex c) { return {Rational(c.real()), Rational(c.imag())}; }
  bool zero() const { return re == 0 && im == 0; }
  bool operator==(const GaussQ& o) const { return re == o.re && im == o.im; }
  GaussQ operator+(const GaussQ& o) const { return {re + o.re, im + o.im}; }
  GaussQ operator-(const GaussQ& o) const { return {re - o.re, im - o.im}; }
  GaussQ operator-() const { return {-re, -im}; }
  GaussQ operator*(const GaussQ& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  GaussQ operator/(const GaussQ& o) const {
    const Rational den = o.re * o.re + o.im * o.im;
    if (den == 0) throw NumericError("exact division by zero");
    return {(re * o.re + im * o.im) / den, (im * o.re - re * o.im) / den};
  }
};

const GaussQ kZero{0, 0};
const GaussQ kOne{1, 0};

// Σ poly_j z^j + Σ_a Σ_k principal[a][k-1] (z - a)^{-k}
struct PartialFractions {
  std::vector<std::pair<GaussQ, std::vector<GaussQ>>> principal;
  std::vector<GaussQ> poly;

  void add_principal(const GaussQ& a, int k, const GaussQ& c) {
    if (c.zero()) return;
    for (auto& [loc, coeffs] : principal) {
      if (loc == a) {
        if (static_cast<int>(coeffs.size()) < k) coeffs.resize(k, kZero);
        coeffs[k - 1] = coeffs[k - 1] + c;
        return;
      }
    }
    std::vector<GaussQ> coeffs(k, kZero);
    coeffs[k - 1] = c;
    principal.emplace_back(a, std::move(coeffs));
  }

  void add_poly(int j, const GaussQ& c) {
    if (c.zero()) return;
    if (static_cast<int>(poly.size()) <= j) poly.resize(j + 1, kZero);
    poly[j] = poly[j] + c;
  }

  void add(const PartialFractions& o, const GaussQ& scale = kOne) {
    for (std::size_t j = 0; j < o.poly.size(); ++j) add_poly(static_cast<int>(j), scale * o.poly[j]);
    for (const auto& [loc, coeffs] : o.principal) {
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        add_principal(loc, static_cast<int>(k) + 1, scale * coeffs[k]);
      }
    }
  }
};

// (z - a)^s expanded in powers of z, scaled by c, added to out.
void add_shifted_power(PartialFractions& out, const GaussQ& a, int s, const GaussQ& c) {
  // binomial(s, t) z^t (-a)^{s-t}
  std::vector<GaussQ> pow_neg_a(s + 1, kOne);
  for (int t = 1; t <= s; ++t) pow_neg_a[t] = pow_neg_a[t - 1] * (-a);
  Rational binom = 1;
  for (int t = 0; t <= s; ++t) {
    out.add_poly(t, c * GaussQ{binom, 0} * pow_neg_a[s - t]);
    binom = binom * (s - t) / (t + 1);
  }
}

// (z - a)^{-k} (z - b)^{-l} as partial fractions.
PartialFractions pole_product(const GaussQ& a, int k, const GaussQ& b, int l) {
  PartialFractions out;
  if (k == 0 && l == 0) {
    out.add_poly(0, kOne);
  } else if (k == 0) {
    out.add_principal(b, l, kOne);
  } else if (l == 0) {
    out.add_principal(a, k, kOne);
  } else if (a == b) {
    out.add_principal(a, k + l, kOne);
  } else {
    const GaussQ inv = kOne / (a - b);
    out.add(pole_product(a, k, b, l - 1), inv);
    out.add(pole_product(a, k - 1, b, l), -inv);
  }
  return out;
}

// poly(z) · (z - a)^{-k}
PartialFractions poly_times_pole(const std::vector<GaussQ>& poly, const GaussQ& a, int k) {
  // Taylor shift: poly(z) = Σ d_r (z - a)^r by repeated synthetic division.
  std::vector<GaussQ> work = poly;
  std::vector<GaussQ> d;
  while (!work.empty()) {
    std::vector<GaussQ> quotient(work.size() > 1 ? work.size() - 1 : 0, kZero);
    GaussQ acc = kZero;
    for (int j = static_cast<int>(work.size()) - 1; j >= 0; --j) {
      acc = acc * a + work[j];
      if (j > 0) quotient[j - 1] = acc;
    }
    d.push_back(acc);
    work = std::move(quotient);
  }
  PartialFractions out;
  for (int r = 0; r < static_cast<int>(d.size()); ++r) {
    if (d[r].zero()) continue;
    if (r < k) {
      out.add_principal(a, k - r, d[r]);
    } else {
      add_shifted_power(out, a, r - k, d[r]);
    }
  }
  return out;
}

PartialFractions multiply(const PartialFractions& x, const PartialFractions& y) {
  PartialFractions out;
  for (std::size_t i = 0; i < x.poly.size(); ++i) {
    for (std::size_t j = 0; j < y.poly.size(); ++j) {
      out.add_poly(static_cast<int>(i + j), x.poly[i] * y.poly[j]);
    }
  }
  for (const auto& [a, ca] : x.principal) {
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (ca[k].zero()) continue;
      out.add(poly_times_pole(y.poly, a, static_cast<int>(k) + 1), ca[k]);
    }
  }
  for (const auto& [b, cb] : y.principal) {
    for (std::size_t l = 0; l < cb.size(); ++l) {
      if (cb[l].zero()) continue;
      out.add(poly_times_pole(x.poly, b, static_cast<int>(l) + 1), cb[l]);
    }
  }
  for (const auto& [a, ca] : x.principal) {
    for (std::size_t k = 0; k < ca.size(); ++k) {
      if (ca[k].zero()) continue;
      for (const auto& [b, cb] : y.principal) {
        for (std::size_t l = 0; l < cb.size(); ++l) {
          if (cb[l].zero()) continue;
          out.add(pole_product(a, static_cast<int>(k) + 1, b, static_cast<int>(l) + 1),
                  ca[k] * cb[l]);
        }
      }
    }
  }
  return out;
}

PartialFractions to_partial_fractions(const AnalyticFunction& f) {
  using Kind = AnalyticFunction::Kind;
  const auto& n = f.node();
  PartialFractions out;
  switch (n.kind) {
    case Kind::pole:
      out.add_principal(GaussQ::from(n.a), n.order, GaussQ::from(n.coeff));
      return out;
    case Kind::polynomial:
      for (std::size_t j = 0; j < n.poly.size(); ++j) {
        out.add_poly(static_cast<int>(j), GaussQ::from(n.poly[j]));
      }
      return out;
    case Kind::exp:
      if (n.lambda == 0.0) {
        out.add_poly(0, GaussQ::from(n.coeff));
        return out;
      }
      break;
    case Kind::power:
      if (f.is_rational()) {
        // (a - z)^γ with integer γ is single valued, so the centre is irrelevant.
        const int g = static_cast<int>(n.gamma.real());
        const GaussQ a = GaussQ::from(n.a);
        const GaussQ c = GaussQ::from(n.coeff);
        if (g >= 0) {
          const GaussQ sign = (g % 2 == 0) ? kOne : -kOne;
          add_shifted_power(out, a, g, c * sign);  // (a - z)^g = (-1)^g (z - a)^g
        } else {
          const GaussQ sign = (g % 2 == 0) ? kOne : -kOne;
          out.add_principal(a, -g, c * sign);
        }
        return out;
      }
      break;
    case Kind::log:
      break;
    case Kind::sum:
      for (const auto& c : n.children) out.add(to_partial_fractions(c));
      return out;
    case Kind::product: {
      out.add_poly(0, kOne);
      for (const auto& c : n.children) out = multiply(out, to_partial_fractions(c));
      return out;
    }
  }
  throw UnsupportedInputError("independence check needs rational components, got " +
                              f.describe());
}

int exact_rank(std::vector<std::vector<GaussQ>> m, int cols) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!m[r][c].zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    for (int r = rank + 1; r < rows; ++r) {
      if (m[r][c].zero()) continue;
      const GaussQ factor = m[r][c] / m[rank][c];
      for (int j = c; j < cols; ++j) m[r][j] = m[r][j] - factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

IndependenceReport poly_independence(const FunctionSystem& system) {
  system.multi_index.validate();
  if (system.functions.size() != system.multi_index.m.size()) {
    throw ParameterError("independence: d does not match the multi-index length");
  }
  std::vector<PartialFractions> columns;
  for (int i = 0; i < system.d(); ++i) {
    const PartialFractions base = to_partial_fractions(system.functions[i]);
    for (int j = 0; j < system.multi_index.m[i]; ++j) {
      PartialFractions mono;
      mono.add_poly(j, kOne);
      columns.push_back(multiply(mono, base));
    }
  }
  std::vector<std::pair<GaussQ, int>> slots;
  for (const auto& col : columns) {
    for (const auto& [loc, coeffs] : col.principal) {
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        bool seen = false;
        for (const auto& s : slots) {
          if (s.first == loc && s.second == static_cast<int>(k) + 1) seen = true;
        }
        if (!seen) slots.emplace_back(loc, static_cast<int>(k) + 1);
      }
    }
  }
  const int cols = static_cast<int>(columns.size());
  std::vector<std::vector<GaussQ>> matrix(slots.size(), std::vector<GaussQ>(cols, kZero));
  for (int c = 0; c < cols; ++c) {
    for (const auto& [loc, coeffs] : columns[c].principal) {
      for (std::size_t k = 0; k < coeffs.size(); ++k) {
        for (std::size_t r = 0; r < slots.size(); ++r) {
          if (slots[r].first == loc && slots[r].second == static_cast<int>(k) + 1) {
            matrix[r][c] = coeffs[k];
          }
        }
      }
    }
  }
  IndependenceReport rep;
  rep.unknowns = cols;
  rep.conditions = static_cast<int>(slots.size());
  rep.rank = exact_rank(std::move(matrix), cols);
  rep.independent = rep.rank == cols;
  return rep;
}

bool poly_independence_check(const FunctionSystem& system) {
  return poly_independence(system).independent;
}

}  // namespace ohpade
