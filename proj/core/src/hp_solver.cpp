#include "ohpade/hp_solver.hpp"

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "ohpade/errors.hpp"

namespace ohpade {

int MultiIndex::total() const { return std::accumulate(m.begin(), m.end(), 0); }

int MultiIndex::max() const { return m.empty() ? 0 : *std::max_element(m.begin(), m.end()); }

void MultiIndex::validate() const {
  if (m.empty()) throw ParameterError("multi-index must have at least one entry");
  for (int mi : m) {
    if (mi < 1) throw ParameterError("multi-index entries must be >= 1");
  }
}

std::string MultiIndex::describe() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  return os.str();
}

MultiIndex MultiIndex::parse(const std::string& text) {
  MultiIndex out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (item.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument(item);
      out.m.push_back(v);
    } catch (const std::exception&) {
      throw ParameterError("cannot parse multi-index '" + text + "'");
    }
  }
  out.validate();
  return out;
}

void FunctionSystem::validate(const Domain& domain) const {
  multi_index.validate();
  if (functions.size() != multi_index.m.size()) {
    throw ParameterError("function system: d does not match the multi-index length");
  }
  for (const auto& f : functions) f.validate(domain);
}

SystemTables::SystemTables(std::shared_ptr<const OrthoBasis> basis, FunctionSystem system,
                           CoeffMethod method)
    : basis_(std::move(basis)), system_(std::move(system)), method_(method) {
  if (!basis_) throw ParameterError("SystemTables: null basis");
  system_.validate(basis_->measure().domain);
  for (const auto& f : system_.functions) tables_.emplace_back(basis_, f, method_);
}

void SystemTables::ensure(int max_index) {
  const int total = system_.multi_index.total();
  for (int i = 0; i < system_.d(); ++i) {
    tables_[i].ensure(system_.multi_index.m[i] - 1 + total, max_index);
  }
}

AssembledSystem assemble_rows(const CoeffTable& table, int n, int rows, int cols) {
  AssembledSystem out;
  out.matrix.resize(rows, cols);
  out.noise.resize(rows, cols);
  for (int k = 0; k < rows; ++k) {
    for (int j = 0; j < cols; ++j) {
      if (!table.covers(j + k, n)) {
        throw ParameterError("assemble_system: coefficient table does not cover the request");
      }
      out.matrix(k, j) = table.at(j + k, n);
      out.noise(k, j) = table.noise(j + k, n);
    }
  }
  return out;
}

AssembledSystem assemble_system(const SystemTables& tables, int n) {
  const MultiIndex& mi = tables.system().multi_index;
  const int total = mi.total();
  AssembledSystem out;
  out.matrix.resize(total, total + 1);
  out.noise.resize(total, total + 1);
  int row = 0;
  for (int i = 0; i < mi.d(); ++i) {
    const auto block = assemble_rows(tables.table(i), n, mi.m[i], total + 1);
    out.matrix.middleRows(row, mi.m[i]) = block.matrix;
    out.noise.middleRows(row, mi.m[i]) = block.noise;
    row += mi.m[i];
  }
  return out;
}

Eigen::VectorXcd min_norm_monic(const Eigen::MatrixXcd& basis, double deficiency_tol,
                                int* degree, bool* deficient) {
  const int c = static_cast<int>(basis.rows());
  for (int top = c - 1; top >= 0; --top) {
    const double weight = basis.row(top).norm();
    if (weight < deficiency_tol) continue;
    Eigen::VectorXcd v = basis * basis.row(top).adjoint();
    const Complex lead = v(top);
    v /= lead;
    for (int j = top + 1; j < c; ++j) v(j) = 0.0;
    v(top) = 1.0;
    if (degree) *degree = top;
    if (deficient) *deficient = top < c - 1;
    return v;
  }
  throw DegenerateSystemError("nullspace representative: every coefficient is negligible");
}

namespace {

// Drops rows that are zero at the noise level and scales the rest to unit
// norm. Returns the kept matrix and the number of dropped rows.
Eigen::MatrixXcd equilibrate(const Eigen::MatrixXcd& m, const Eigen::MatrixXd* noise,
                             double factor, int* dropped) {
  std::vector<int> keep;
  for (int r = 0; r < m.rows(); ++r) {
    bool zero = true;
    for (int j = 0; j < m.cols(); ++j) {
      const double floor = noise ? factor * (*noise)(r, j) : 0.0;
      if (std::abs(m(r, j)) > floor) {
        zero = false;
        break;
      }
    }
    if (!zero) keep.push_back(r);
  }
  *dropped = static_cast<int>(m.rows()) - static_cast<int>(keep.size());
  Eigen::MatrixXcd out(keep.size(), m.cols());
  for (std::size_t r = 0; r < keep.size(); ++r) {
    out.row(r) = m.row(keep[r]) / m.row(keep[r]).norm();
  }
  return out;
}

}  // namespace

DenominatorResult solve_denominator(const Eigen::MatrixXcd& m, const Eigen::MatrixXd* noise,
                                    const SolverOptions& options) {
  const int rows = static_cast<int>(m.rows());
  const int cols = static_cast<int>(m.cols());
  if (cols != rows + 1 && cols <= rows) {
    throw ParameterError("solve_denominator: expected fewer rows than columns");
  }
  if (noise && (noise->rows() != rows || noise->cols() != cols)) {
    throw ParameterError("solve_denominator: noise shape mismatch");
  }
  DenominatorResult res;
  int dropped = 0;
  const Eigen::MatrixXcd a = equilibrate(m, noise, options.zero_row_factor, &dropped);
  res.zero_rows = dropped;
  if (a.rows() == 0) {
    throw DegenerateSystemError("solve_denominator: system matrix is numerically zero");
  }
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const auto& sigma = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > options.rank_tol * sigma(0)) ++rank;
  }
  res.singular_values.assign(rows, 0.0);
  for (int i = 0; i < sigma.size(); ++i) res.singular_values[i] = sigma(i);
  res.nullspace_dim = cols - rank;
  res.unique = rank == rows && cols == rows + 1;
  const Eigen::MatrixXcd null_basis = svd.matrixV().rightCols(cols - rank);
  const Eigen::VectorXcd v =
      min_norm_monic(null_basis, options.deficiency_tol, &res.degree, &res.degree_deficient);
  res.q.assign(v.data(), v.data() + v.size());
  return res;
}

ApproximantSet numerators(const SystemTables& tables, const DenominatorResult& q, int n) {
  const FunctionSystem& sys = tables.system();
  ApproximantSet out;
  out.denominator = q;
  out.numerators.resize(sys.d());
  for (int i = 0; i < sys.d(); ++i) {
    const CoeffTable& t = tables.table(i);
    out.numerators[i].resize(sys.multi_index.m[i]);
    for (int k = 0; k < sys.multi_index.m[i]; ++k) {
      auto& coeffs = out.numerators[i][k];
      coeffs.assign(std::max(n, 0), 0.0);
      for (int beta = 0; beta < n; ++beta) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j < q.q.size(); ++j) {
          if (q.q[j] == 0.0) continue;
          acc += q.q[j] * t.at(static_cast<int>(j) + k, beta);
        }
        coeffs[beta] = acc;
      }
    }
  }
  return out;
}

ApproximantSet solve_approximant(SystemTables& tables, int n, const SolverOptions& options) {
  if (n < tables.system().multi_index.max()) {
    throw ParameterError("solve_approximant: n must be at least max m_i");
  }
  tables.ensure(n);
  const AssembledSystem sys = assemble_system(tables, n);
  DenominatorResult q = solve_denominator(sys.matrix, &sys.noise, options);
  q.n = n;
  return numerators(tables, q, n);
}

ClassicalResult classical_hp_oracle(const std::vector<std::vector<Complex>>& taylor, int n,
                                    const MultiIndex& m, double rank_tol) {
  m.validate();
  if (static_cast<int>(taylor.size()) != m.d()) {
    throw ParameterError("classical_hp_oracle: one Taylor list per function required");
  }
  const int total = m.total();
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(total, total + 1);
  int row = 0;
  for (int i = 0; i < m.d(); ++i) {
    for (int k = 0; k < m.m[i]; ++k, ++row) {
      for (int j = 0; j <= total; ++j) {
        const int idx = n - j - k;
        if (idx < 0) continue;
        if (idx >= static_cast<int>(taylor[i].size())) {
          throw ParameterError("classical_hp_oracle: Taylor list too short");
        }
        t(row, j) = taylor[i][idx];
      }
    }
  }
  std::vector<int> keep;
  for (int r = 0; r < total; ++r) {
    if (t.row(r).norm() > 0.0) keep.push_back(r);
  }
  ClassicalResult res;
  Eigen::MatrixXcd kernel;
  if (keep.empty()) {
    kernel = Eigen::MatrixXcd::Identity(total + 1, total + 1);
    res.rank = 0;
  } else {
    Eigen::MatrixXcd a(keep.size(), total + 1);
    for (std::size_t r = 0; r < keep.size(); ++r) a.row(r) = t.row(keep[r]) / t.row(keep[r]).norm();
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(a);
    lu.setThreshold(rank_tol);
    res.rank = static_cast<int>(lu.rank());
    kernel = lu.kernel();
  }
  res.unique = res.rank == total;
  // Orthonormal basis of the kernel for the representative rule.
  Eigen::HouseholderQR<Eigen::MatrixXcd> qr(kernel);
  const Eigen::MatrixXcd basis =
      qr.householderQ() * Eigen::MatrixXcd::Identity(kernel.rows(), kernel.cols());
  int degree = 0;
  const Eigen::VectorXcd v = min_norm_monic(basis, 1e-10, &degree, &res.degree_deficient);
  res.q.assign(v.data(), v.data() + v.size());
  return res;
}

double definition_residual(const OrthoBasis& basis, const FunctionSystem& system,
                           const ApproximantSet& approx) {
  const int n = approx.denominator.n;
  const Poly& q = approx.denominator.q;
  double worst = 0.0;
  for (int i = 0; i < system.d(); ++i) {
    for (int k = 0; k < system.multi_index.m[i]; ++k) {
      const auto& coeffs = approx.numerators[i][k];
      const auto values = basis.integrate_many(
          [&](Complex t, std::span<Complex> out) {
            const auto p = basis.eval_all(t, n + 1);
            Complex pk = 0.0;
            for (int b = 0; b < n; ++b) pk += coeffs[b] * p[b];
            Complex zk = 1.0;
            for (int s = 0; s < k; ++s) zk *= t;
            const Complex g = poly_eval(q, t) * zk * system.functions[i](t) - pk;
            for (int j = 0; j <= n; ++j) out[j] = g * std::conj(p[j]);
          },
          n + 1, 2 * n + static_cast<int>(q.size()) + k + 16);
      for (const Complex v : values) worst = std::max(worst, std::abs(v));
    }
  }
  return worst;
}

Complex eval_numerator(const OrthoBasis& basis, const ApproximantSet& approx, int i, int k,
                       Complex z) {
  const auto& coeffs = approx.numerators.at(i).at(k);
  const auto p = basis.eval_all(z, static_cast<int>(coeffs.size()));
  Complex acc = 0.0;
  for (std::size_t b = 0; b < coeffs.size(); ++b) acc += coeffs[b] * p[b];
  return acc;
}

Complex eval_approximant(const OrthoBasis& basis, const ApproximantSet& approx, int i,
                         Complex z) {
  return eval_numerator(basis, approx, i, 0, z) / poly_eval(approx.denominator.q, z);
}

}  // namespace ohpade
