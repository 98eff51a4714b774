#include "ohpade/experiment.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "ohpade/errors.hpp"

namespace ohpade {

namespace {

// Rethrows the active exception with "n = <n>: " prepended, keeping its type.
[[noreturn]] void rethrow_at(int n) {
  const std::string prefix = "n = " + std::to_string(n) + ": ";
  try {
    throw;
  } catch (const InsufficientDataError& e) {
    throw InsufficientDataError(prefix + e.what(), e.achieved());
  } catch (const DegenerateSystemError& e) {
    throw DegenerateSystemError(prefix + e.what(), e.achieved());
  } catch (const NumericError& e) {
    throw NumericError(prefix + e.what(), e.achieved());
  } catch (const DomainError& e) {
    throw DomainError(prefix + e.what());
  } catch (const ParameterError& e) {
    throw ParameterError(prefix + e.what());
  } catch (const UnsupportedInputError& e) {
    throw UnsupportedInputError(prefix + e.what());
  } catch (const ConfigError& e) {
    throw ConfigError(prefix + e.what());
  }
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (version != kSchemaVersion) {
    throw ConfigError("unsupported config version " + std::to_string(version));
  }
  try {
    measure.validate();
    system.multi_index.validate();
    system.validate(measure.domain);
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  if (n_lo < system.multi_index.max()) {
    throw ConfigError("n_lo must be at least max m_i = " +
                      std::to_string(system.multi_index.max()));
  }
  if (n_hi < n_lo + 8) throw ConfigError("n_hi must be at least n_lo + 8");
  for (const auto& f : formats) {
    if (f != "json" && f != "csv") throw ConfigError("unknown output format '" + f + "'");
  }
}

ExperimentConfig ExperimentConfig::from_entry(const CatalogEntry& entry, int n_lo, int n_hi) {
  ExperimentConfig c;
  c.entry_id = entry.id;
  c.measure = entry.measure;
  c.system = entry.system;
  c.truth = entry.truth;
  c.n_lo = n_lo;
  c.n_hi = n_hi;
  return c;
}

ExperimentConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  ExperimentConfig c;
  c.version = j.value("version", 0);
  if (c.version != ExperimentConfig::kSchemaVersion) {
    throw ConfigError("config needs \"version\": " +
                      std::to_string(ExperimentConfig::kSchemaVersion));
  }
  try {
    if (j.contains("entry")) {
      const auto& e = catalog_entry(j.at("entry").get<std::string>());
      c.entry_id = e.id;
      c.measure = e.measure;
      c.system = e.system;
      c.truth = e.truth;
    } else {
      c.entry_id = j.value("label", std::string("inline"));
      c.system = system_from_json(j.at("system"));
    }
    if (j.contains("measure")) c.measure = measure_from_json(j.at("measure"));
    if (j.contains("ground_truth")) c.truth = ground_truth_from_json(j.at("ground_truth"));
    const auto range = j.at("n_range").get<std::vector<int>>();
    if (range.size() != 2) throw ConfigError("n_range must be [n_lo, n_hi]");
    c.n_lo = range[0];
    c.n_hi = range[1];
    if (j.contains("method")) c.method = coeff_method_from_string(j.at("method").get<std::string>());
    if (j.contains("tolerances")) {
      const auto& t = j.at("tolerances");
      c.options.rank_tol = t.value("rank_tol", c.options.rank_tol);
      c.options.deficiency_tol = t.value("deficiency_tol", c.options.deficiency_tol);
      c.options.zero_row_factor = t.value("zero_row_factor", c.options.zero_row_factor);
    }
    if (j.contains("outputs")) {
      const auto& o = j.at("outputs");
      c.out_dir = o.value("dir", std::string());
      if (o.contains("formats")) c.formats = o.at("formats").get<std::vector<std::string>>();
    }
  } catch (const Json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  } catch (const ParameterError& e) {
    throw ConfigError(e.what());
  }
  c.validate();
  return c;
}

Json to_json(const ExperimentConfig& c) {
  Json j{{"version", c.version},
         {"label", c.entry_id},
         {"measure", to_json(c.measure)},
         {"system", to_json(c.system)},
         {"n_range", {c.n_lo, c.n_hi}},
         {"method", to_string(c.method)},
         {"tolerances",
          {{"rank_tol", c.options.rank_tol},
           {"deficiency_tol", c.options.deficiency_tol},
           {"zero_row_factor", c.options.zero_row_factor}}},
         {"outputs", {{"dir", c.out_dir}, {"formats", c.formats}}}};
  if (c.truth) j["ground_truth"] = to_json(*c.truth);
  return j;
}

ConvergenceReport run_sweep(const ExperimentConfig& config) {
  config.validate();
  ConvergenceReport report;
  report.entry_id = config.entry_id;
  report.measure = config.measure;
  report.multi_index = config.system.multi_index;

  const auto& m = config.system.multi_index;
  std::optional<Poly> target;
  if (config.truth && config.truth->complete(m)) {
    target = config.truth->q_mf();
    report.theta_pred =
        predicted_theta(*config.truth, m, ConformalMap(config.measure.domain));
  }

  auto basis = std::make_shared<const OrthoBasis>(OrthoBasis::build(config.measure, config.n_hi));
  SystemTables tables(basis, config.system, config.method);
  std::vector<int> ns;
  std::vector<double> errs;
  for (int n = config.n_lo; n <= config.n_hi; ++n) {
    SweepRow row;
    row.n = n;
    try {
      tables.ensure(n);
      const AssembledSystem sys = assemble_system(tables, n);
      row.denominator = solve_denominator(sys.matrix, &sys.noise, config.options);
      row.denominator.n = n;
      const Poly q(row.denominator.q.begin(),
                   row.denominator.q.begin() + row.denominator.degree + 1);
      row.zeros = root_list(q);
    } catch (const Error&) {
      rethrow_at(n);
    }
    if (target) {
      row.err_coeff_norm = coeff_distance(row.denominator.q, *target);
      ns.push_back(n);
      errs.push_back(*row.err_coeff_norm);
      try {
        row.theta_running = measured_theta(ns, errs, config.n_lo, n).theta;
      } catch (const InsufficientDataError&) {
      }
    }
    report.per_n.push_back(std::move(row));
  }
  if (target) {
    try {
      const ThetaFit fit = measured_theta(ns, errs, config.n_lo, config.n_hi);
      report.theta_fit = fit.theta;
      report.exact_regime = fit.exact_regime;
    } catch (const InsufficientDataError&) {
    }
  }
  return report;
}

Json to_json(const ConvergenceReport& r) {
  Json rows = Json::array();
  for (const auto& row : r.per_n) {
    Json j = to_json(row.denominator);
    Json zeros = Json::array();
    for (const Complex z : row.zeros) zeros.push_back(complex_to_json(z));
    j["zeros"] = zeros;
    j["err_coeff_norm"] = row.err_coeff_norm ? Json(*row.err_coeff_norm) : Json(nullptr);
    j["theta_running"] = row.theta_running ? Json(*row.theta_running) : Json(nullptr);
    rows.push_back(j);
  }
  Json out{{"entry_id", r.entry_id},
           {"measure", to_json(r.measure)},
           {"m", to_json(r.multi_index)},
           {"theta_pred", r.theta_pred ? Json(*r.theta_pred) : Json(nullptr)},
           {"theta_fit", r.theta_fit ? Json(*r.theta_fit) : Json(nullptr)},
           {"exact_regime", r.exact_regime},
           {"per_n", rows}};
  return out;
}

std::string to_csv(const ConvergenceReport& r) {
  std::size_t zero_cols = 0;
  for (const auto& row : r.per_n) zero_cols = std::max(zero_cols, row.zeros.size());
  std::ostringstream os;
  os << "n,err_coeff_norm,theta_running,unique,degree_deficient";
  for (std::size_t k = 1; k <= zero_cols; ++k) os << ",zero_" << k << "_re,zero_" << k << "_im";
  os << '\n';
  for (const auto& row : r.per_n) {
    os << row.n << ',' << (row.err_coeff_norm ? format_real(*row.err_coeff_norm) : "") << ','
       << (row.theta_running ? format_real(*row.theta_running) : "") << ','
       << (row.denominator.unique ? 1 : 0) << ',' << (row.denominator.degree_deficient ? 1 : 0);
    for (std::size_t k = 0; k < zero_cols; ++k) {
      if (k < row.zeros.size()) {
        os << ',' << format_real(row.zeros[k].real()) << ',' << format_real(row.zeros[k].imag());
      } else {
        os << ",,";
      }
    }
    os << '\n';
  }
  return os.str();
}

std::vector<std::string> write_report(const ConvergenceReport& r, const std::string& dir,
                                      const std::vector<std::string>& formats) {
  std::vector<std::string> written;
  const std::string base = (dir.empty() ? std::string(".") : dir) + "/" + r.entry_id;
  for (const auto& f : formats) {
    if (f == "json") {
      write_text_atomic(base + ".json", to_json(r).dump(2) + "\n");
      written.push_back(base + ".json");
    } else if (f == "csv") {
      write_text_atomic(base + ".csv", to_csv(r));
      written.push_back(base + ".csv");
    } else {
      throw ConfigError("unknown output format '" + f + "'");
    }
  }
  return written;
}

}  // namespace ohpade
