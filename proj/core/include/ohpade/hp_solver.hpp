#pragma once

#include <Eigen/Dense>
#include <memory>
#include <string>
#include <vector>

#include "ohpade/analytic_function.hpp"
#include "ohpade/coefficients.hpp"
#include "ohpade/polynomial.hpp"

namespace ohpade {

struct MultiIndex {
  std::vector<int> m;

  int d() const { return static_cast<int>(m.size()); }
  int total() const;
  int max() const;
  void validate() const;
  std::string describe() const;  // "2,1"
  // Parses a comma separated list such as "2,1".
  static MultiIndex parse(const std::string& text);
  bool operator==(const MultiIndex&) const = default;
};

struct FunctionSystem {
  std::vector<AnalyticFunction> functions;
  MultiIndex multi_index;

  int d() const { return static_cast<int>(functions.size()); }
  // Sizes agree and every F_i is holomorphic near E.
  void validate(const Domain& domain) const;
};

struct SolverOptions {
  double rank_tol = 1e-8;        // σ_min/σ_max above this means full row rank
  double deficiency_tol = 1e-10;  // top-coefficient threshold for monic scaling
  double zero_row_factor = 8.0;   // entries below factor·noise count as zero
};

struct DenominatorResult {
  int n = 0;
  Poly q;  // |m| + 1 monomial coefficients, lowest first
  std::vector<double> singular_values;
  bool unique = false;
  bool degree_deficient = false;
  int degree = 0;
  int nullspace_dim = 0;
  int zero_rows = 0;
};

struct ApproximantSet {
  DenominatorResult denominator;
  // numerators[i][k] holds [Q z^k F_i]_β for β = 0 .. n-1, the coefficients of
  // P_{n,m,k,i} in the orthonormal basis.
  std::vector<std::vector<std::vector<Complex>>> numerators;
};

// Coefficient tables for every F_i, extended together.
class SystemTables {
 public:
  SystemTables(std::shared_ptr<const OrthoBasis> basis, FunctionSystem system,
               CoeffMethod method = CoeffMethod::contour);

  // Shifts needed for the system at index n (k + j <= m_i - 1 + |m|).
  void ensure(int max_index);
  const CoeffTable& table(int i) const { return tables_.at(i); }
  const FunctionSystem& system() const { return system_; }
  const OrthoBasis& basis() const { return *basis_; }
  std::shared_ptr<const OrthoBasis> basis_ptr() const { return basis_; }
  CoeffMethod method() const { return method_; }

 private:
  std::shared_ptr<const OrthoBasis> basis_;
  FunctionSystem system_;
  CoeffMethod method_;
  std::vector<CoeffTable> tables_;
};

struct AssembledSystem {
  Eigen::MatrixXcd matrix;  // |m| × (|m|+1), M[(i,k)][j] = [z^{j+k} F_i]_n
  Eigen::MatrixXd noise;    // per-entry rounding estimate
};

// Throws ParameterError when the tables do not cover index n.
AssembledSystem assemble_system(const SystemTables& tables, int n);
// Same layout for a single function with an m_star × (m+1) matrix.
AssembledSystem assemble_rows(const CoeffTable& table, int n, int rows, int cols);

// Denominator from the numerical nullspace. The representative is the
// minimum-norm element with top coefficient 1 (the smallest right singular
// vector when the nullspace is one-dimensional); if every nullspace vector has
// a negligible top coefficient the next degree down is tried.
DenominatorResult solve_denominator(const Eigen::MatrixXcd& m,
                                    const Eigen::MatrixXd* noise = nullptr,
                                    const SolverOptions& options = {});

ApproximantSet numerators(const SystemTables& tables, const DenominatorResult& q, int n);

// One (n, m) solve: assemble, solve, numerators.
ApproximantSet solve_approximant(SystemTables& tables, int n, const SolverOptions& options = {});

// Classical linearised Hermite–Padé system in Taylor coefficients:
// T[(i,k)][j] = f_{i, n-j-k}. Kernel by full-pivot LU, same representative
// rule as solve_denominator.
struct ClassicalResult {
  Poly q;
  bool unique = false;
  bool degree_deficient = false;
  int rank = 0;
};
ClassicalResult classical_hp_oracle(const std::vector<std::vector<Complex>>& taylor, int n,
                                    const MultiIndex& m, double rank_tol = 1e-8);

// max over (i, k, j <= n) of |<Q z^k F_i - P_{k,i}, p_j>| by fresh quadrature.
double definition_residual(const OrthoBasis& basis, const FunctionSystem& system,
                           const ApproximantSet& approx);

// P_{n,m,k,i}(z) and R_{n,m,i}(z) = P_{n,m,0,i}(z)/Q(z).
Complex eval_numerator(const OrthoBasis& basis, const ApproximantSet& approx, int i, int k,
                       Complex z);
Complex eval_approximant(const OrthoBasis& basis, const ApproximantSet& approx, int i,
                         Complex z);

// Minimum-norm vector with unit coefficient at the highest possible index
// inside span(basis). Columns of `basis` must be orthonormal.
Eigen::VectorXcd min_norm_monic(const Eigen::MatrixXcd& basis, double deficiency_tol,
                                int* degree, bool* deficient);

}  // namespace ohpade
