#include "numerov/presets.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "numerov/error.hpp"

namespace numerov {
namespace {

SolverConfig listing_config(double delta, double eps, int kmax, int nmax, double e_in,
                            double v_max, double dE) {
  SolverConfig c;
  c.delta_left = delta;
  c.delta_right = 2.0 * delta;
  c.eps = eps;
  c.kmax = kmax;
  c.nmax = nmax;
  c.e_in = e_in;
  c.v_max = v_max;
  c.dE = dE;
  return c;
}

RunSetup hydrogen_preset() {
  RunSetup s;
  s.name = "hydrogen";
  s.a = 0.001;
  s.b = 60.001;
  s.h = 0.01;
  s.potential = PotentialModel::hydrogen(0);
  const double delta = 0.02;
  s.config = listing_config(delta, 1e-4, 300, 3, -1.6, 0.0, delta / 4.0);
  s.config.paper_schedule = {24.0, {{false, 126.0}, {false, 3.0}, {true, 6.0}}};
  s.analytic = AnalyticLabeling{{AnalyticKind::hydrogen}, 1, 1};
  return s;
}

RunSetup morse_preset() {
  RunSetup s;
  s.name = "morse";
  s.a = -1.01;
  s.b = 5.01;
  s.h = 0.006;
  s.potential = PotentialModel::morse(16.0, 2.0);
  const double delta = 0.01;
  s.config = listing_config(delta, 1e-5, 100, 2, 0.0, 16.0, delta);
  s.config.paper_schedule = {7.2, {{false, 70.0}, {false, 0.1}, {true, 50.0}}};
  AnalyticSystem sys{AnalyticKind::morse};
  sys.depth = 16.0;
  sys.range = 2.0;
  s.analytic = AnalyticLabeling{sys, 0, 1};
  return s;
}

RunSetup qdot_preset(bool paper_literal) {
  RunSetup s;
  s.name = "qdot";
  s.a = 0.001;
  s.b = 60.001;
  s.h = 0.02;
  s.potential = PotentialModel::quantum_dot(0.01, paper_literal ? 1 : 2);
  const double delta = 0.01;
  s.config = listing_config(delta, 1e-5, 100, 5, 0.086857, 2.0, delta / 2.8);
  // The listing's cascade of `if m >= ...` blocks collapses to one jump per state.
  s.config.paper_schedule = {1.0 / 25.0,
                             {{false, 6.0}, {false, 6.0}, {true, 6.5}, {true, 6.5}, {true, 4.0}}};
  AnalyticSystem sys{AnalyticKind::quantum_dot};
  sys.omega = 0.01;
  // Reference levels are labelled n = 4, 6, 8, 10, 12.
  s.analytic = AnalyticLabeling{sys, 4, 2};
  return s;
}

RunSetup harmonic_preset() {
  RunSetup s;
  s.name = "harmonic-test";
  s.a = -6.0;
  s.b = 6.0;
  s.h = 0.01;
  s.potential = PotentialModel::harmonic(1.0);
  s.config = listing_config(0.01, 1e-8, 100, 4, 0.0, 10.0, 0.05);
  s.config.delta_right = 0.01;
  s.analytic = AnalyticLabeling{{AnalyticKind::harmonic}, 0, 1};
  return s;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_double(std::string_view key, std::string_view value) {
  double out = 0.0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::usage, "config: '" + std::string(key) + "' expects a number, got '" +
                                      std::string(value) + "'");
  }
  return out;
}

int parse_int(std::string_view key, std::string_view value) {
  int out = 0;
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw Error(ErrorCode::usage, "config: '" + std::string(key) + "' expects an integer, got '" +
                                      std::string(value) + "'");
  }
  return out;
}

}  // namespace

std::vector<std::string> preset_names() { return {"hydrogen", "morse", "qdot", "harmonic-test"}; }

RunSetup load_preset(std::string_view name, bool paper_literal) {
  if (name == "hydrogen") return hydrogen_preset();
  if (name == "morse") return morse_preset();
  if (name == "qdot") return qdot_preset(paper_literal);
  if (name == "harmonic-test") return harmonic_preset();
  throw Error(ErrorCode::usage, "unknown preset '" + std::string(name) + "'");
}

RunSetup apply_config_text(RunSetup s, std::string_view text) {
  // Potential keys are collected first so that e.g. `omega` and `exponent`
  // may appear in any order relative to `potential`.
  std::string kind;
  std::string table;
  std::optional<double> depth, range, omega, stiffness;
  std::optional<int> exponent, ell;
  bool delta_right_set = false;

  std::istringstream lines{std::string(text)};
  std::string raw;
  int lineno = 0;
  while (std::getline(lines, raw)) {
    ++lineno;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorCode::usage, "config line " + std::to_string(lineno) + ": expected key = value");
    }
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    auto& c = s.config;
    if (key == "a") s.a = parse_double(key, value);
    else if (key == "b") s.b = parse_double(key, value);
    else if (key == "h") s.h = parse_double(key, value);
    else if (key == "delta") {
      c.delta_left = parse_double(key, value);
      if (!delta_right_set) c.delta_right = 2.0 * c.delta_left;
    } else if (key == "delta_right") {
      c.delta_right = parse_double(key, value);
      delta_right_set = true;
    } else if (key == "eps") c.eps = parse_double(key, value);
    else if (key == "kmax") c.kmax = parse_int(key, value);
    else if (key == "nmax") c.nmax = parse_int(key, value);
    else if (key == "Ein") c.e_in = parse_double(key, value);
    else if (key == "Vmax") c.v_max = parse_double(key, value);
    else if (key == "dE") c.dE = parse_double(key, value);
    else if (key == "mode") {
      if (value == "auto") c.scan_mode = ScanMode::auto_bracket;
      else if (value == "paper-steps") c.scan_mode = ScanMode::paper_steps;
      else throw Error(ErrorCode::usage, "config: mode must be auto or paper-steps");
    } else if (key == "kernel") {
      if (value == "standard") c.kernel = KernelKind::standard;
      else if (value == "generalized") c.kernel = KernelKind::generalized;
      else throw Error(ErrorCode::usage, "config: kernel must be standard or generalized");
    } else if (key == "potential") kind = std::string(value);
    else if (key == "table") table = std::string(value);
    else if (key == "ell") ell = parse_int(key, value);
    else if (key == "De") depth = parse_double(key, value);
    else if (key == "alpha") range = parse_double(key, value);
    else if (key == "omega") omega = parse_double(key, value);
    else if (key == "exponent") exponent = parse_int(key, value);
    else if (key == "stiffness") stiffness = parse_double(key, value);
    else throw Error(ErrorCode::usage, "config: unknown key '" + std::string(key) + "'");
  }

  if (kind.empty() && (depth || range || omega || exponent || stiffness || !table.empty())) {
    kind = to_string(s.potential.kind());
  }
  if (!kind.empty()) {
    const int keep_ell = s.potential.ell();
    const auto previous_kind = s.potential.kind();
    if (kind == "hydrogen" || kind == "hydrogen_reduced") {
      s.potential = PotentialModel::hydrogen();
      s.analytic = AnalyticLabeling{{AnalyticKind::hydrogen}, 1, 1};
    } else if (kind == "morse") {
      const double d = depth.value_or(16.0);
      const double r = range.value_or(2.0);
      s.potential = PotentialModel::morse(d, r);
      AnalyticSystem sys{AnalyticKind::morse};
      sys.depth = d;
      sys.range = r;
      s.analytic = AnalyticLabeling{sys, 0, 1};
    } else if (kind == "qdot" || kind == "quantum_dot") {
      const double w = omega.value_or(0.01);
      s.potential = PotentialModel::quantum_dot(w, exponent.value_or(2));
      AnalyticSystem sys{AnalyticKind::quantum_dot};
      sys.omega = w;
      s.analytic = AnalyticLabeling{sys, s.analytic ? s.analytic->first_n : 0,
                                    s.analytic ? s.analytic->n_stride : 1};
    } else if (kind == "harmonic") {
      const double k = stiffness.value_or(1.0);
      s.potential = PotentialModel::harmonic(k);
      AnalyticSystem sys{AnalyticKind::harmonic};
      sys.stiffness = k;
      s.analytic = AnalyticLabeling{sys, 0, 1};
    } else if (kind == "tabulated") {
      if (table.empty()) throw Error(ErrorCode::usage, "config: tabulated potential needs 'table'");
      s.potential = PotentialModel::load_table(table);
      s.analytic.reset();
    } else {
      throw Error(ErrorCode::usage, "config: unknown potential '" + kind + "'");
    }
    s.potential = effective_potential(s.potential, keep_ell);
    // A fixed-step schedule is tuned to one potential.
    if (s.potential.kind() != previous_kind || s.potential.kind() == PotentialKind::tabulated) {
      s.config.paper_schedule = {};
    }
  }
  if (ell) s.potential = effective_potential(s.potential, *ell);
  return s;
}

RunSetup apply_config_file(RunSetup base, const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::io, "cannot open config file " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return apply_config_text(std::move(base), text.str());
}

}  // namespace numerov
