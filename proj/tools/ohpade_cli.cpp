// ohpade command line: basis, coeff, approx, incomplete, sweep, catalog, verify.
#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>

#include "ohpade/ohpade.hpp"

using namespace ohpade;

namespace {

enum Exit { kOk = 0, kVerifyFailed = 1, kConfigError = 2, kNumericError = 3 };

struct Options {
  std::string config;
  std::string entry;
  std::string measure;
  std::string function;
  std::string m;
  std::string n_range;
  std::string out;
  std::string format = "json";
  std::string suite = "all";
  std::string method = "contour";
  int n = 20;
  int m_star = 0;  // 0: take it from the entry
  int index = 0;
  int shift = 0;
};

std::string real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::pair<int, int> parse_range(const std::string& text) {
  std::string t = text;
  for (char& c : t) {
    if (c == ':' || c == ',') c = ' ';
  }
  std::istringstream is(t);
  int lo = 0, hi = 0;
  if (!(is >> lo >> hi) || !(is >> std::ws).eof()) {
    throw ConfigError("--n-range expects 'lo,hi', got '" + text + "'");
  }
  return {lo, hi};
}

// Measure from --measure (a weight name or inline JSON), else the fallback.
MeasureSpec pick_measure(const Options& o, const MeasureSpec& fallback) {
  if (o.measure.empty()) return fallback;
  if (o.measure.front() == '{') return measure_from_json(Json::parse(o.measure));
  return measure_from_json(Json(o.measure));
}

// System from --config, --entry or --function/--m, in that order.
struct Problem {
  std::string label = "inline";
  MeasureSpec measure;
  FunctionSystem system;
  std::optional<GroundTruth> truth;
};

Problem pick_problem(const Options& o, const char* default_entry) {
  Problem p;
  if (!o.config.empty()) {
    const ExperimentConfig c = [&] {
      Json j = read_json_file(o.config);
      // n_range is irrelevant for single solves; fill a valid placeholder.
      if (!j.contains("n_range")) j["n_range"] = {64, 72};
      return config_from_json(j);
    }();
    p.label = c.entry_id;
    p.measure = c.measure;
    p.system = c.system;
    p.truth = c.truth;
  } else if (!o.function.empty()) {
    p.system.functions.push_back(function_from_json(Json::parse(o.function)));
    p.system.multi_index = MultiIndex{{1}};
  } else {
    const auto& e = catalog_entry(o.entry.empty() ? default_entry : o.entry);
    p.label = e.id;
    p.measure = e.measure;
    p.system = e.system;
    p.truth = e.truth;
  }
  p.measure = pick_measure(o, p.measure);
  if (!o.m.empty()) p.system.multi_index = multi_index_from_json(Json(o.m));
  if (p.system.d() != p.system.multi_index.d()) {
    throw ConfigError("--m length does not match the number of functions");
  }
  return p;
}

void emit(const Options& o, const std::string& name, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  const std::string path = o.out + "/" + name;
  write_text_atomic(path, text);
  std::cerr << "wrote " << path << '\n';
}

int cmd_basis(const Options& o) {
  const MeasureSpec m = pick_measure(o, MeasureSpec::circle());
  const OrthoBasis b = OrthoBasis::build(m, o.n);
  // probes at fixed Φ values, so any interval gets comparable ones
  const Complex probes[] = {b.map().inverse({2.0, 0.0}), b.map().inverse({0.0, 1.5}),
                            b.map().inverse({-1.5, 1.0})};
  const std::vector<int> degrees{o.n / 2, o.n};
  const auto diag = b.reg_diagnostics(probes, degrees);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "n,kappa\n";
    for (int n = 0; n <= o.n; ++n) os << n << ',' << real(b.kappa(n)) << '\n';
    emit(o, "basis.csv", os.str());
    return kOk;
  }
  Json j{{"measure", to_json(m)},
         {"N", o.n},
         {"orthonormality_residual", b.orthonormality_residual()},
         {"kappa", b.kappas()}};
  Json env = Json::array();
  for (int k = 1; k <= std::min(4, o.n); ++k) {
    const auto e = b.kappa_envelope(k);
    env.push_back({{"m", k}, {"min_ratio", e.min_ratio}, {"max_ratio", e.max_ratio},
                   {"bound", e.bound}, {"degenerating", e.degenerating}});
  }
  j["kappa_envelope"] = env;
  Json reg = Json::array();
  for (const auto& d : diag) {
    reg.push_back({{"z", complex_to_json(d.z)}, {"n", d.n}, {"p_root", d.p_root},
                   {"phi_abs", d.phi_abs}, {"s_root", d.s_root}, {"phi_inv", d.phi_inv}});
  }
  j["reg_diagnostics"] = reg;
  emit(o, "basis.json", j.dump(2));
  return kOk;
}

int cmd_coeff(const Options& o) {
  const Problem p = pick_problem(o, "circle_theta06");
  if (o.index < 0 || o.index >= p.system.d()) throw ConfigError("--index out of range");
  const AnalyticFunction g = p.system.functions[o.index].times_z_power(o.shift);
  auto basis = std::make_shared<const OrthoBasis>(OrthoBasis::build(p.measure, o.n));
  const Complex quad = coeff_quadrature(*basis, p.system.functions[o.index], o.shift, o.n);
  const double rho = default_contour_rho(*basis, g, o.n);
  const Complex cont = coeff_contour(*basis, g, o.n, rho);
  if (o.format == "csv") {
    std::ostringstream os;
    os << "n,k,quad_re,quad_im,contour_re,contour_im,difference\n"
       << o.n << ',' << o.shift << ',' << real(quad.real()) << ',' << real(quad.imag()) << ','
       << real(cont.real()) << ',' << real(cont.imag()) << ',' << real(std::abs(quad - cont))
       << '\n';
    emit(o, "coeff.csv", os.str());
    return kOk;
  }
  const Json j{{"function", to_json(p.system.functions[o.index])},
               {"measure", to_json(p.measure)},
               {"n", o.n},
               {"k", o.shift},
               {"quadrature", complex_to_json(quad)},
               {"contour", complex_to_json(cont)},
               {"contour_rho", rho},
               {"difference", std::abs(quad - cont)}};
  emit(o, "coeff.json", j.dump(2));
  return kOk;
}

int cmd_approx(const Options& o) {
  const Problem p = pick_problem(o, "circle_theta06");
  auto basis = std::make_shared<const OrthoBasis>(OrthoBasis::build(p.measure, o.n));
  p.system.validate(p.measure.domain);
  SystemTables tables(basis, p.system, coeff_method_from_string(o.method));
  const ApproximantSet a = solve_approximant(tables, o.n);
  const auto& q = a.denominator;
  const auto zeros = root_list(Poly(q.q.begin(), q.q.begin() + q.degree + 1));
  if (o.format == "csv") {
    std::ostringstream os;
    os << "j,q_re,q_im\n";
    for (std::size_t j = 0; j < q.q.size(); ++j) {
      os << j << ',' << real(q.q[j].real()) << ',' << real(q.q[j].imag()) << '\n';
    }
    emit(o, p.label + "_n" + std::to_string(o.n) + ".csv", os.str());
    return kOk;
  }
  Json j = to_json(q);
  Json z = Json::array();
  for (const Complex c : zeros) z.push_back(complex_to_json(c));
  j["zeros"] = z;
  j["label"] = p.label;
  j["m"] = to_json(p.system.multi_index);
  j["definition_residual"] = definition_residual(*basis, p.system, a);
  if (p.truth && p.truth->complete(p.system.multi_index)) {
    j["err_coeff_norm"] = coeff_distance(q.q, p.truth->q_mf());
  }
  emit(o, p.label + "_n" + std::to_string(o.n) + ".json", j.dump(2));
  return kOk;
}

int cmd_incomplete(const Options& o) {
  const Problem p = pick_problem(o, "incomplete_log");
  if (p.system.d() != 1) throw ConfigError("incomplete needs a single function");
  IncompleteSetup setup{2, 1};
  if (!o.entry.empty() && catalog_entry(o.entry).incomplete) setup = *catalog_entry(o.entry).incomplete;
  if (!o.m.empty()) setup.m = MultiIndex::parse(o.m).m.at(0);
  if (o.m_star > 0) setup.m_star = o.m_star;
  const int m = setup.m, m_star = setup.m_star;
  const auto [lo, hi] = o.n_range.empty() ? std::pair{10, 30} : parse_range(o.n_range);
  auto basis = std::make_shared<const OrthoBasis>(OrthoBasis::build(p.measure, hi));
  const CaptureTrace tr = pole_capture_trace(basis, p.system.functions[0], m, m_star, lo, hi,
                                             coeff_method_from_string(o.method));
  if (o.format == "json") {
    Json steps = Json::array();
    for (const auto& s : tr.steps) {
      Json z = Json::array();
      for (const Complex c : s.zeros) z.push_back(complex_to_json(c));
      steps.push_back({{"n", s.n}, {"zeros", z}, {"max_distance", s.max_distance},
                       {"nullspace_dim", s.nullspace_dim}});
    }
    Json poles = Json::array();
    for (const auto& s : tr.poles) poles.push_back(complex_to_json(s.location));
    Json j{{"m", m}, {"m_star", m_star}, {"rho_m_star", Json(tr.rho_m_star)},
           {"poles", poles}, {"steps", steps}};
    if (tr.fit) j["fitted_rate"] = tr.fit->rate;
    emit(o, p.label + "_incomplete.json", j.dump(2));
    return kOk;
  }
  std::ostringstream os;
  os << "n,zero_re,zero_im,dist_to_pole,nullspace_dim\n";
  for (const auto& s : tr.steps) {
    for (const Complex z : s.zeros) {
      os << s.n << ',' << real(z.real()) << ',' << real(z.imag()) << ',';
      if (!tr.poles.empty()) {
        double d = std::numeric_limits<double>::infinity();
        for (const auto& pole : tr.poles) d = std::min(d, std::abs(z - pole.location));
        os << real(d);
      }
      os << ',' << s.nullspace_dim << '\n';
    }
  }
  emit(o, p.label + "_incomplete.csv", os.str());
  return kOk;
}

int cmd_sweep(const Options& o) {
  ExperimentConfig c;
  if (!o.config.empty()) {
    c = config_from_json(read_json_file(o.config));
  } else {
    const auto& e = catalog_entry(o.entry.empty() ? "circle_theta06" : o.entry);
    const auto [lo, hi] = o.n_range.empty() ? std::pair{std::max(5, e.system.multi_index.max()), 30}
                                            : parse_range(o.n_range);
    c = ExperimentConfig::from_entry(e, lo, hi);
    c.measure = pick_measure(o, c.measure);
    c.method = coeff_method_from_string(o.method);
  }
  if (!o.out.empty()) c.out_dir = o.out;
  if (o.format == "both") {
    c.formats = {"json", "csv"};
  } else if (!o.format.empty()) {
    c.formats = {o.format};
  }
  c.validate();
  const ConvergenceReport r = run_sweep(c);
  if (c.out_dir.empty()) {
    for (const auto& f : c.formats) std::cout << (f == "csv" ? to_csv(r) : to_json(r).dump(2) + "\n");
    return kOk;
  }
  for (const auto& path : write_report(r, c.out_dir, c.formats)) std::cerr << "wrote " << path << '\n';
  return kOk;
}

int cmd_catalog(const Options& o) {
  if (o.format == "json") {
    Json j = Json::array();
    for (const auto& e : catalog()) {
      if (o.entry.empty() || e.id == o.entry) j.push_back(to_json(e));
    }
    if (j.empty()) catalog_entry(o.entry);
    emit(o, "catalog.json", j.dump(2));
    return kOk;
  }
  std::ostringstream os;
  for (const auto& e : catalog()) {
    if (!o.entry.empty() && e.id != o.entry) continue;
    os << e.id << "  [" << e.measure.describe() << ", m = " << e.system.multi_index.describe()
       << "]\n  " << e.summary << '\n';
    if (e.theta) os << "  theta = " << real(*e.theta) << '\n';
    if (e.expect_unique) os << "  expected unique: " << (*e.expect_unique ? "yes" : "no") << '\n';
    if (e.rho0) os << "  rho0 = " << real(*e.rho0) << '\n';
    os << "  " << e.derivation << "\n\n";
  }
  if (!o.entry.empty() && os.str().empty()) catalog_entry(o.entry);
  emit(o, "catalog.txt", os.str());
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto results = run_suite(o.suite);
  bool ok = true;
  Json j = Json::array();
  for (const auto& r : results) {
    ok = ok && r.pass;
    if (o.format == "json") {
      j.push_back(to_json(r));
    } else {
      std::cout << format_result(r) << std::endl;
    }
  }
  if (o.format == "json") emit(o, "verify.json", Json{{"pass", ok}, {"results", j}}.dump(2));
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ohpade: orthogonal Hermite-Pade solves, sweeps and checks"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON config file")->check(CLI::ExistingFile);
    sub->add_option("--entry", o.entry, "catalog entry id");
    sub->add_option("--measure", o.measure, "weight name or measure JSON");
    sub->add_option("--out", o.out, "output directory (default: stdout)");
  };

  auto* basis = app.add_subcommand("basis", "build a basis and print diagnostics");
  basis->add_option("--measure", o.measure, "weight name or measure JSON");
  basis->add_option("--n", o.n, "maximal degree N")->check(CLI::NonNegativeNumber);
  basis->add_option("--out", o.out, "output directory (default: stdout)");
  basis->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* coeff = app.add_subcommand("coeff", "one coefficient [z^k F]_n by both methods");
  common(coeff);
  coeff->add_option("--function", o.function, "function JSON");
  coeff->add_option("--index", o.index, "which F_i of the system");
  coeff->add_option("--k", o.shift, "shift k")->check(CLI::NonNegativeNumber);
  coeff->add_option("--n", o.n, "index n")->check(CLI::NonNegativeNumber);
  coeff->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* approx = app.add_subcommand("approx", "one (n, m) solve");
  common(approx);
  approx->add_option("--function", o.function, "function JSON (d = 1)");
  approx->add_option("--m", o.m, "multi-index, comma separated");
  approx->add_option("--n", o.n, "index n")->check(CLI::NonNegativeNumber);
  approx->add_option("--method", o.method)->check(CLI::IsMember({"contour", "quadrature"}));
  approx->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* incomplete = app.add_subcommand("incomplete", "incomplete problem pole capture trace");
  common(incomplete);
  incomplete->add_option("--function", o.function, "function JSON");
  incomplete->add_option("--m", o.m, "denominator degree m");
  incomplete->add_option("--m-star", o.m_star, "number of conditions m*");
  incomplete->add_option("--n-range", o.n_range, "lo,hi");
  incomplete->add_option("--method", o.method)->check(CLI::IsMember({"contour", "quadrature"}));
  incomplete->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv"}));

  auto* sweep = app.add_subcommand("sweep", "convergence sweep over n");
  common(sweep);
  sweep->add_option("--n-range", o.n_range, "lo,hi");
  sweep->add_option("--method", o.method)->check(CLI::IsMember({"contour", "quadrature"}));
  sweep->add_option("--format", o.format)->check(CLI::IsMember({"json", "csv", "both"}));

  auto* cat = app.add_subcommand("catalog", "list catalog entries");
  cat->add_option("--entry", o.entry, "show one entry");
  cat->add_option("--out", o.out, "output directory (default: stdout)");
  cat->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  auto* verify = app.add_subcommand("verify", "run acceptance suites");
  verify->add_option("--suite", o.suite, "suite name or criterion id")
      ->check(CLI::IsMember(suite_names()) | CLI::Validator(
                                                 [](std::string& s) {
                                                   return s.size() > 1 && s[0] == 'C'
                                                              ? std::string()
                                                              : std::string("bad suite");
                                                 },
                                                 "C<k>"));
  verify->add_option("--out", o.out, "output directory (default: stdout)");
  verify->add_option("--format", o.format)->check(CLI::IsMember({"json", "text"}));

  // Text is the natural default for catalog/verify.
  cat->preparse_callback([&](std::size_t) { o.format = "text"; });
  verify->preparse_callback([&](std::size_t) { o.format = "text"; });
  sweep->preparse_callback([&](std::size_t) { o.format.clear(); });
  incomplete->preparse_callback([&](std::size_t) { o.format = "csv"; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigError;
  }

  try {
    if (*basis) return cmd_basis(o);
    if (*coeff) return cmd_coeff(o);
    if (*approx) return cmd_approx(o);
    if (*incomplete) return cmd_incomplete(o);
    if (*sweep) return cmd_sweep(o);
    if (*cat) return cmd_catalog(o);
    if (*verify) return cmd_verify(o);
  } catch (const NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kNumericError;
  } catch (const Json::exception& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const Error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  }
  return kOk;
}
