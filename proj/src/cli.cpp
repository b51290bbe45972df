#include "thermobar/cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <set>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "thermobar/equilibria.hpp"
#include "thermobar/errors.hpp"
#include "thermobar/evolution.hpp"
#include "thermobar/generator.hpp"
#include "thermobar/report.hpp"
#include "thermobar/spectral.hpp"

namespace thermobar::cli {

namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

const std::set<std::string> kModelKeys = {"L1", "L2", "L3", "a", "b", "m", "k", "tau", "law"};
const std::set<std::string> kGridKeys = {"n", "n1", "n2", "n3"};
const std::set<std::string> kRunKeys = {"dt",      "t_max",       "l_min",         "l_max",
                                        "num",     "spacing",     "initial",       "seed",
                                        "amplitude", "theta_value", "center",      "width",
                                        "well_prepared", "window_fraction", "snapshot_stride"};

std::string trim(const std::string& s, std::size_t* lead = nullptr) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) {
    if (lead) *lead = s.size();
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  if (lead) *lead = first;
  return s.substr(first, last - first + 1);
}

[[noreturn]] void parse_fail(int line, std::size_t column, const std::string& what) {
  throw Error(ErrorCode::ParseError,
              "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

double to_double(const std::string& key, const std::string& value) {
  char* end = nullptr;
  const double x = std::strtod(value.c_str(), &end);
  if (value.empty() || end != value.c_str() + value.size() || !std::isfinite(x)) {
    throw Error(ErrorCode::BadValue, "key '" + key + "' expects a number, got '" + value + "'");
  }
  return x;
}

long long to_integer(const std::string& key, const std::string& value) {
  char* end = nullptr;
  errno = 0;
  const long long x = std::strtoll(value.c_str(), &end, 10);
  if (value.empty() || end != value.c_str() + value.size() || errno == ERANGE) {
    throw Error(ErrorCode::BadValue, "key '" + key + "' expects an integer, got '" + value + "'");
  }
  return x;
}

bool to_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "no") return false;
  throw Error(ErrorCode::BadValue, "key '" + key + "' expects true or false, got '" + value + "'");
}

int to_cells(const std::string& key, const std::string& value) {
  const long long n = to_integer(key, value);
  if (n < 2 || n > 100000) throw Error(ErrorCode::TooFewCells, "key '" + key + "' needs 2 <= n <= 100000");
  return static_cast<int>(n);
}

void apply_run_key(RunOptions& run, const std::string& key, const std::string& value) {
  if (key == "dt") run.dt = to_double(key, value);
  else if (key == "t_max") run.t_max = to_double(key, value);
  else if (key == "l_min") run.l_min = to_double(key, value);
  else if (key == "l_max") run.l_max = to_double(key, value);
  else if (key == "num") run.num = static_cast<int>(to_integer(key, value));
  else if (key == "spacing") run.spacing = value;
  else if (key == "initial") run.initial = value;
  else if (key == "seed") {
    const long long s = to_integer(key, value);
    if (s < 0) throw Error(ErrorCode::BadValue, "seed must be non-negative");
    run.seed = static_cast<std::uint64_t>(s);
  } else if (key == "amplitude") run.amplitude = to_double(key, value);
  else if (key == "theta_value") run.theta_value = to_double(key, value);
  else if (key == "center") run.center = to_double(key, value);
  else if (key == "width") run.width = to_double(key, value);
  else if (key == "well_prepared") run.well_prepared = to_bool(key, value);
  else if (key == "window_fraction") run.window_fraction = to_double(key, value);
  else if (key == "snapshot_stride") run.snapshot_stride = static_cast<int>(to_integer(key, value));
}

void write_text(const fs::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Usage, "cannot write " + path.string());
  out << body;
}

std::string iso_now() {
  const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

ordered_json check_json(const CheckResult& c) {
  return {{"name", c.name}, {"status", to_string(c.status)}, {"residual", c.residual},
          {"tolerance", c.tolerance}};
}

std::string matrix_csv(const Eigen::MatrixXd& A) {
  std::string s;
  for (Eigen::Index i = 0; i < A.rows(); ++i) {
    for (Eigen::Index j = 0; j < A.cols(); ++j) {
      if (j) s += ',';
      s += format_double(A(i, j));
    }
    s += '\n';
  }
  return s;
}

struct Flags {
  std::string command;
  std::string config;
  std::string out = "thermobar_out";
  std::optional<double> dt, t_max, l_min, l_max;
  std::optional<int> num;
  bool dump_operators = false;
  int threads = 1;
};

class Session {
 public:
  Session(const Flags& flags, ParsedConfig cfg) : flags_(flags), cfg_(std::move(cfg)) {
    if (const char* env = std::getenv("THERMOBAR_OUT"); env && *env) out_dir_ = env;
    else out_dir_ = flags.out;
    fs::create_directories(out_dir_);
    started_ = iso_now();
  }

  int execute() {
    const Discretization disc =
        build_discretization(cfg_.model, cfg_.grid.n1, cfg_.grid.n2, cfg_.grid.n3);
    const GeneratorSystem sys = assemble_generator(cfg_.model, disc);
    if (flags_.dump_operators) {
      emit("A.csv", matrix_csv(sys.A));
      emit("M.csv", matrix_csv(sys.M));
    }
    const std::string& c = flags_.command;
    if (c == "verify") verify(sys);
    else if (c == "simulate") simulate_cmd(sys);
    else if (c == "spectrum") spectrum(sys);
    else if (c == "resolvent") resolvent(sys);
    else if (c == "equilibrium") equilibrium(sys);
    else if (c == "decay") decay(sys);
    return finish();
  }

  int finish_with_error(const Error& e) {
    error_ = e.what();
    error_code_ = to_string(e.code());
    finish();
    return is_numerical(e.code()) ? 3 : 2;
  }

 private:
  void emit(const std::string& name, const std::string& body) {
    write_text(out_dir_ / name, body);
    outputs_.push_back(name);
  }

  void add(const CheckResult& c) { checks_.push_back(c); }

  StateVector initial_state(const GeneratorSystem& sys) const {
    return make_initial_state(cfg_.model, sys.disc, initial_data_spec(cfg_.run));
  }

  void verify(const GeneratorSystem& sys) {
    const StructureReport structure = verify_structure(sys);
    for (const auto& c : structure.checks) add(c);
    const StateVector z = discrete_kernel(sys);
    add(CheckResult::judge("kernel_null_vector", kernel_residual(sys, z), 1e-12));

    ordered_json equivalence = ordered_json::array();
    auto check_state = [&](const std::string& label, const StateVector& u0) {
      const EquivalenceReport r = check_equivalence(u0, sys);
      add(CheckResult::judge("equivalence_" + label, r.residual, r.tolerance));
      equivalence.push_back({{"state", label}, {"inner_with_kernel", r.inner_with_kernel},
                             {"zeta3_times_condition", r.zeta3_times_condition},
                             {"residual", r.residual}, {"tolerance", r.tolerance}});
    };
    check_state("constant_theta", make_initial_state(cfg_.model, sys.disc, {presets::ConstantTheta{1.0}, false}));
    check_state("kernel", z);
    check_state("configured", initial_state(sys));

    ordered_json j;
    j["structure_checks_passed"] = std::count_if(structure.checks.begin(), structure.checks.end(),
                                                 [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
    j["structure_checks_total"] = structure.checks.size();
    j["checks"] = ordered_json::array();
    for (const auto& c : checks_) j["checks"].push_back(check_json(c));
    j["equivalence"] = equivalence;
    emit("verify.json", j.dump(2) + "\n");
  }

  Trajectory run_trajectory(const GeneratorSystem& sys) {
    const Trajectory t = simulate(initial_state(sys), sys, cfg_.run.dt, cfg_.run.t_max, cfg_.run.snapshot_stride);
    std::string csv = "t,E_total,E_deviation,dissipation_midpoint\n";
    for (std::size_t i = 0; i < t.times.size(); ++i) {
      csv += format_double(t.times[i]) + ',' + format_double(t.energy_total[i]) + ',' +
             format_double(t.energy_deviation[i]) + ',' + format_double(t.dissipation[i]) + '\n';
    }
    emit("trajectory.csv", csv);
    for (std::size_t s = 0; s < t.snapshots.size(); ++s) {
      char name[40];
      std::snprintf(name, sizeof name, "snapshot_%06zu.csv", s);
      emit(name, snapshot_csv(t.snapshots[s], sys.disc));
    }
    double worst = 0.0;
    for (double r : t.ledger_residual) worst = std::max(worst, r);
    add(CheckResult::judge("energy_ledger", worst, 1e-11));
    double increase = 0.0;
    for (std::size_t i = 1; i < t.energy_total.size(); ++i) {
      increase = std::max(increase, (t.energy_total[i] - t.energy_total[i - 1]) /
                                        std::max(t.energy_total[0], std::numeric_limits<double>::min()));
    }
    add(CheckResult::judge("energy_monotone", increase, 1e-13));
    return t;
  }

  static std::string snapshot_csv(const StateVector& u, const Discretization& d) {
    const FieldSamples f = unpack(u, d);
    std::string csv = "x,field,value\n";
    auto row = [&csv](double x, const char* field, double v) {
      csv += format_double(x) + ',' + field + ',' + format_double(v) + '\n';
    };
    for (const char* field : {"displacement", "velocity"}) {
      const auto& seg = std::string(field) == "displacement" ? f.displacement : f.velocity;
      for (int s = 0; s < 3; ++s) {
        for (int j = s == 0 ? 0 : 1; j <= d.cells(s); ++j) {
          row(d.node_x(d.first_node[s] + j), field, seg[s][static_cast<std::size_t>(j)]);
        }
      }
    }
    for (int c = 0; c < d.middle().cells; ++c) row(d.middle().cell_center(c), "theta", f.theta[static_cast<std::size_t>(c)]);
    for (std::size_t j = 0; j < f.flux.size(); ++j) row(d.middle().node(static_cast<int>(j)), "flux", f.flux[j]);
    return csv;
  }

  void simulate_cmd(const GeneratorSystem& sys) {
    const Trajectory t = run_trajectory(sys);
    ordered_json j{{"steps", t.times.size() - 1},
                   {"kernel_coeff", t.kernel_coeff},
                   {"energy_initial", t.energy_total.front()},
                   {"energy_final", t.energy_total.back()},
                   {"deviation_final", t.energy_deviation.back()}};
    emit("simulate.json", j.dump(2) + "\n");
  }

  void spectrum(const GeneratorSystem& sys) {
    const SpectrumReport r = compute_spectrum(sys);
    for (const auto& c : r.checks) add(c);
    std::string csv = "re,im\n";
    for (Eigen::Index i = 0; i < r.eigenvalues.size(); ++i) {
      csv += format_double(r.eigenvalues(i).real()) + ',' + format_double(r.eigenvalues(i).imag()) + '\n';
    }
    emit("spectrum.csv", csv);
    const DeflatedOperator defl = deflate(sys);
    const double abscissa = spectral_abscissa(defl);
    ordered_json j{{"size", r.eigenvalues.size()},
                   {"scale", r.scale},
                   {"tol_zero", r.tol_zero},
                   {"zero_multiplicity", r.zero_multiplicity},
                   {"abscissa_range", r.abscissa_range},
                   {"deflated_abscissa", abscissa},
                   {"strip_violations", r.strip_violations.size()},
                   {"checks", ordered_json::array()}};
    for (const auto& c : r.checks) j["checks"].push_back(check_json(c));
    emit("spectrum.json", j.dump(2) + "\n");
  }

  void resolvent(const GeneratorSystem& sys) {
    const DeflatedOperator defl = deflate(sys);
    Spacing spacing = Spacing::Log;
    if (cfg_.run.spacing == "linear") spacing = Spacing::Linear;
    else if (cfg_.run.spacing != "log") throw Error(ErrorCode::BadValue, "spacing must be log or linear");
    const ResolventSweep s = resolvent_sweep(defl, cfg_.run.l_min, cfg_.run.l_max, cfg_.run.num, spacing, flags_.threads);
    std::string csv = "l,norm\n";
    for (std::size_t i = 0; i < s.l_values.size(); ++i) {
      csv += format_double(s.l_values[i]) + ',' + format_double(s.norms[i]) + '\n';
    }
    emit("resolvent.csv", csv);
    add(CheckResult::judge("sup_at_finite_l", std::isfinite(s.sup_norm) ? 0.0 : 1.0, 0.0));
    ordered_json j{{"points", s.l_values.size()},     {"sup_norm", s.sup_norm},
                   {"l_at_sup", s.l_at_sup},          {"plateau_ratio", s.plateau_ratio},
                   {"top_decade_spread", s.top_decade_spread}, {"kernel_residual", defl.kernel_residual}};
    emit("resolvent.json", j.dump(2) + "\n");
  }

  void equilibrium(const GeneratorSystem& sys) {
    const StateVector u0 = make_initial_state(cfg_.model, sys.disc,
                                              {initial_data_spec(cfg_.run).preset, false});
    const EquilibriumDecomposition split = project(u0, sys);
    const EquivalenceReport r = check_equivalence(u0, sys);
    add(CheckResult::judge("equivalence", r.residual, r.tolerance));
    ordered_json j{{"gamma", split.coeff},
                   {"inner_with_kernel", r.inner_with_kernel},
                   {"range_condition", r.condition},
                   {"zeta3_times_condition", r.zeta3_times_condition},
                   {"residual", r.residual},
                   {"tolerance", r.tolerance}};
    std::cout << j.dump(2) << "\n";
    emit("equilibrium.json", j.dump(2) + "\n");
  }

  void decay(const GeneratorSystem& sys) {
    const Trajectory t = run_trajectory(sys);
    const DeflatedOperator defl = deflate(sys);
    const Eigen::VectorXcd eig = deflated_eigenvalues(defl);
    const double abscissa = spectral_abscissa(defl);
    Eigen::Index slowest = 0;
    eig.real().maxCoeff(&slowest);
    std::optional<double> period;
    if (std::abs(eig(slowest).imag()) > 0.0) period = 2.0 * std::numbers::pi / std::abs(eig(slowest).imag());
    const DecayReport r = fit_decay(t, cfg_.run.window_fraction, 2.0 * std::abs(abscissa), period);
    add(CheckResult::judge("decay_rate_gap", *r.relative_gap, 0.10));
    ordered_json j{{"fitted_rate", r.fitted_rate},
                   {"fit_window", {r.t_lo, r.t_hi}},
                   {"fit_residual", r.fit_residual},
                   {"fit_intercept", r.intercept},
                   {"fit_samples", r.samples},
                   {"envelope_maxima", r.envelope},
                   {"reference_rate", *r.reference_rate},
                   {"relative_gap", *r.relative_gap},
                   {"spectral_abscissa", abscissa}};
    if (period) j["slowest_period"] = *period;
    emit("decay.json", j.dump(2) + "\n");
  }

  int finish() {
    ordered_json m;
    m["tool"] = "thermobar";
    m["version"] = kToolVersion;
    m["command"] = flags_.command;
    m["started"] = started_;
    m["finished"] = iso_now();
    ordered_json model{{"L1", cfg_.model.L1}, {"L2", cfg_.model.L2}, {"L3", cfg_.model.L3},
                       {"a", cfg_.model.a},   {"b", cfg_.model.b},   {"m", cfg_.model.m},
                       {"k", cfg_.model.k},   {"law", to_string(cfg_.model.law)}};
    if (cfg_.model.cattaneo()) model["tau"] = cfg_.model.tau;
    const RunOptions& r = cfg_.run;
    ordered_json run{{"dt", r.dt}, {"t_max", r.t_max}, {"l_min", r.l_min}, {"l_max", r.l_max},
                     {"num", r.num}, {"spacing", r.spacing}, {"initial", r.initial},
                     {"amplitude", r.amplitude}, {"well_prepared", r.well_prepared},
                     {"window_fraction", r.window_fraction}, {"snapshot_stride", r.snapshot_stride},
                     {"threads", flags_.threads}};
    if (r.seed) run["seed"] = *r.seed;
    m["config"] = {{"model", model},
                   {"grid", {{"n1", cfg_.grid.n1}, {"n2", cfg_.grid.n2}, {"n3", cfg_.grid.n3}}},
                   {"run", run}};
    m["notes"] = ordered_json::array();
    if (cfg_.grid.defaulted) {
      m["notes"].push_back("no grid given; defaulted to n1 = n2 = n3 = " + std::to_string(kDefaultCells));
    }
    m["checks"] = ordered_json::array();
    for (const auto& c : checks_) m["checks"].push_back(check_json(c));
    const auto passed = std::count_if(checks_.begin(), checks_.end(),
                                      [](const CheckResult& c) { return c.status == CheckStatus::Pass; });
    m["checks_passed"] = passed;
    m["checks_total"] = checks_.size();
    if (!error_.empty()) m["error"] = {{"code", error_code_}, {"message", error_}};
    outputs_.push_back("manifest.json");
    m["outputs"] = outputs_;
    write_text(out_dir_ / "manifest.json", m.dump(2) + "\n");
    return all_passed(checks_) ? 0 : 1;
  }

  Flags flags_;
  ParsedConfig cfg_;
  fs::path out_dir_;
  std::string started_;
  std::vector<std::string> outputs_;
  std::vector<CheckResult> checks_;
  std::string error_;
  std::string error_code_;
};

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

ParsedConfig parse_config_text(const std::string& text) {
  ParsedConfig out;
  std::istringstream in(text);
  std::string raw_line;
  std::string section;
  RawConfig model_raw;
  int line_no = 0;
  while (std::getline(in, raw_line)) {
    ++line_no;
    std::string line = raw_line;
    if (const auto c = line.find_first_of("#;"); c != std::string::npos) line.erase(c);
    std::size_t lead = 0;
    const std::string body = trim(line, &lead);
    if (body.empty()) continue;

    if (body.front() == '[') {
      if (body.back() != ']') parse_fail(line_no, lead + 1, "unterminated section header");
      section = trim(body.substr(1, body.size() - 2));
      if (section != "model" && section != "grid" && section != "run") {
        throw Error(ErrorCode::UnknownKey, "unknown section [" + section + "] at line " + std::to_string(line_no));
      }
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(line_no, lead + 1, "expected key = value");
    const std::string key = trim(line.substr(0, eq));
    std::size_t value_lead = 0;
    const std::string value = trim(line.substr(eq + 1), &value_lead);
    if (key.empty()) parse_fail(line_no, eq + 1, "missing key before '='");
    if (key.find_first_of(" \t") != std::string::npos) parse_fail(line_no, lead + 1, "key contains whitespace");
    if (value.empty()) parse_fail(line_no, eq + 2, "missing value after '='");

    const bool is_model = kModelKeys.count(key) > 0;
    const bool is_grid = kGridKeys.count(key) > 0;
    const bool is_run = kRunKeys.count(key) > 0;
    const bool belongs = section.empty() ? (is_model || is_grid || is_run)
                         : section == "model" ? is_model
                         : section == "grid"  ? is_grid
                                              : is_run;
    if (!belongs) {
      throw Error(ErrorCode::UnknownKey, "unknown key '" + key + "'" +
                                             (section.empty() ? "" : " in [" + section + "]") +
                                             " at line " + std::to_string(line_no));
    }
    const std::string qualified = (section.empty() ? "" : section + ".") + key;
    if (out.entries.count(qualified) || (!section.empty() && out.entries.count(key))) {
      parse_fail(line_no, lead + 1, "duplicate key '" + key + "'");
    }
    out.entries[qualified] = value;

    if (is_model) {
      if (model_raw.count(key)) parse_fail(line_no, lead + 1, "duplicate key '" + key + "'");
      model_raw[key] = value;
    } else if (is_grid) {
      const int n = to_cells(key, value);
      if (key == "n") out.grid.n1 = out.grid.n2 = out.grid.n3 = n;
      else if (key == "n1") out.grid.n1 = n;
      else if (key == "n2") out.grid.n2 = n;
      else out.grid.n3 = n;
      out.grid.defaulted = false;
    } else {
      apply_run_key(out.run, key, value);
    }
  }
  out.model = validate_config(model_raw);
  return out;
}

ParsedConfig parse_config_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Usage, "cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

InitialDataSpec initial_data_spec(const RunOptions& run) {
  InitialDataSpec spec;
  spec.well_prepared = run.well_prepared;
  if (run.initial == "zero") spec.preset = presets::Zero{};
  else if (run.initial == "constant_theta") spec.preset = presets::ConstantTheta{run.theta_value};
  else if (run.initial == "gaussian") spec.preset = presets::GaussianDisplacement{run.center, run.width, run.amplitude};
  else if (run.initial == "random") spec.preset = presets::RandomSeeded{run.seed, run.amplitude};
  else if (run.initial == "kernel") spec.preset = presets::KernelVector{run.amplitude};
  else throw Error(ErrorCode::BadValue, "unknown initial data '" + run.initial + "'");
  return spec;
}

int run(int argc, const char* const* argv) {
  Flags flags;
  CLI::App app{"Thermoelastic transmission bar: structure checks, time evolution and spectra"};
  app.add_option("command", flags.command, "verify | simulate | spectrum | resolvent | equilibrium | decay")
      ->required()
      ->check(CLI::IsMember({"verify", "simulate", "spectrum", "resolvent", "equilibrium", "decay"}));
  app.add_option("--config", flags.config, "configuration file")->required();
  app.add_option("--out", flags.out, "output directory (THERMOBAR_OUT overrides)");
  app.add_option("--dt", flags.dt, "time step");
  app.add_option("--tmax", flags.t_max, "final time");
  app.add_option("--lmin", flags.l_min, "smallest resolvent frequency");
  app.add_option("--lmax", flags.l_max, "largest resolvent frequency");
  app.add_option("--num", flags.num, "number of resolvent frequencies");
  app.add_flag("--dump-operators", flags.dump_operators, "write A.csv and M.csv");
  app.add_option("--threads", flags.threads, "worker threads for the resolvent sweep")
      ->check(CLI::Range(1, 256));
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  ParsedConfig cfg;
  try {
    cfg = parse_config_file(flags.config);
    if (flags.dt) cfg.run.dt = *flags.dt;
    if (flags.t_max) cfg.run.t_max = *flags.t_max;
    if (flags.l_min) cfg.run.l_min = *flags.l_min;
    if (flags.l_max) cfg.run.l_max = *flags.l_max;
    if (flags.num) cfg.run.num = *flags.num;
    if (!(cfg.run.dt > 0.0)) throw Error(ErrorCode::BadValue, "dt must be positive");
    if (!(cfg.run.t_max > 0.0)) throw Error(ErrorCode::BadValue, "t_max must be positive");
  } catch (const Error& e) {
    std::cerr << "thermobar: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 2;
  }

  std::optional<Session> session;
  try {
    session.emplace(flags, cfg);
    const int code = session->execute();
    if (code != 0) std::cerr << "thermobar: one or more checks failed; see manifest.json\n";
    return code;
  } catch (const Error& e) {
    std::cerr << "thermobar: " << to_string(e.code()) << ": " << e.what() << "\n";
    if (session) return session->finish_with_error(e);
    return is_numerical(e.code()) ? 3 : 2;
  } catch (const std::exception& e) {
    std::cerr << "thermobar: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace thermobar::cli
