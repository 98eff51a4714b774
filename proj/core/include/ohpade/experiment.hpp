#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ohpade/catalog.hpp"
#include "ohpade/json_io.hpp"

namespace ohpade {

struct ExperimentConfig {
  static constexpr int kSchemaVersion = 1;

  int version = kSchemaVersion;
  std::string entry_id;  // catalog id, or a free label for inline systems
  MeasureSpec measure;
  FunctionSystem system;
  std::optional<GroundTruth> truth;
  int n_lo = 0;
  int n_hi = 0;
  CoeffMethod method = CoeffMethod::contour;
  SolverOptions options;
  std::string out_dir;
  std::vector<std::string> formats{"json"};

  // ConfigError unless n_lo >= max m_i, n_hi >= n_lo + 8 and the pieces fit.
  void validate() const;
  static ExperimentConfig from_entry(const CatalogEntry& entry, int n_lo, int n_hi);
};

// {"version": 1, "entry": id} or {"version": 1, "measure": ..., "system": ...,
//  "ground_truth": ...}, plus "n_range": [lo, hi], "method", "tolerances",
// "outputs": {"dir", "formats"}.
ExperimentConfig config_from_json(const Json& j);
Json to_json(const ExperimentConfig& c);

struct SweepRow {
  int n = 0;
  DenominatorResult denominator;
  std::vector<Complex> zeros;
  std::optional<double> err_coeff_norm;  // ‖Q_n - Q^F‖_maxabs
  std::optional<double> theta_running;   // fit over [n_lo, n]
};

struct ConvergenceReport {
  std::string entry_id;
  MeasureSpec measure;
  MultiIndex multi_index;
  std::optional<double> theta_pred;
  std::optional<double> theta_fit;
  bool exact_regime = false;
  std::vector<SweepRow> per_n;
};

ConvergenceReport run_sweep(const ExperimentConfig& config);

Json to_json(const ConvergenceReport& r);
// n, err_coeff_norm, theta_running, unique, degree_deficient, zero_1_re, ...
std::string to_csv(const ConvergenceReport& r);
// Writes <dir>/<entry>.json and/or .csv; returns the paths written.
std::vector<std::string> write_report(const ConvergenceReport& r, const std::string& dir,
                                      const std::vector<std::string>& formats);

}  // namespace ohpade
