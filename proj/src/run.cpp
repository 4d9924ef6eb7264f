#include "numerov/run.hpp"

#include <chrono>
#include <cmath>

#include "numerov/error.hpp"
#include "numerov/oracle.hpp"

namespace numerov {
namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string to_string(ScanMode mode) {
  return mode == ScanMode::auto_bracket ? "auto" : "paper-steps";
}

std::string to_string(KernelKind kernel) {
  return kernel == KernelKind::standard ? "standard" : "generalized";
}

nlohmann::json deviation(double value, double reference) {
  const double absolute = value - reference;
  nlohmann::json out = {{"absolute", absolute}, {"relative", nullptr}};
  if (reference != 0.0) out["relative"] = absolute / std::abs(reference);
  return out;
}

nlohmann::json mc_json(const McEstimate& e) {
  return {{"integral", e.integral},
          {"efficiency", e.efficiency},
          {"std_error", e.std_error},
          {"samples", e.samples},
          {"seed", e.seed}};
}

nlohmann::json potential_json(const PotentialModel& v) {
  nlohmann::json params = nlohmann::json::object();
  switch (v.kind()) {
    case PotentialKind::morse:
      params = {{"depth", v.depth()}, {"range", v.range()}};
      break;
    case PotentialKind::quantum_dot:
      params = {{"omega", v.omega()}, {"exponent", v.exponent()}};
      break;
    case PotentialKind::harmonic:
      params = {{"stiffness", v.stiffness()}};
      break;
    case PotentialKind::tabulated:
      params = {{"x_min", v.table_min()}, {"x_max", v.table_max()}};
      break;
    case PotentialKind::hydrogen_reduced:
      break;
  }
  return {{"kind", to_string(v.kind())},
          {"ell", v.ell()},
          {"params", params},
          {"formula", v.description()}};
}

}  // namespace

std::vector<double> oracle_window(const PotentialModel& v, const Grid& grid, std::size_t k,
                                  double floor) {
  const auto matrix = finite_difference_hamiltonian(v, grid);
  const std::size_t below = sturm_count(matrix, floor);
  const std::size_t wanted = std::min(below + k, matrix.diagonal.size());
  auto values = tridiagonal_eigenvalues(matrix, wanted);
  values.erase(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(below));
  return values;
}

RunReport run_solve(const RunOptions& options) {
  const auto start = Clock::now();
  RunReport report;
  report.setup = options.setup;
  report.grid = options.setup.grid();
  report.seed = options.seed;
  report.mc_samples = options.mc_samples;
  const auto& v = options.setup.potential;
  const auto& config = options.setup.config;

  auto spectrum = scan_spectrum(report.grid, v, config);
  report.solve_seconds = seconds_since(start);
  report.warnings = spectrum.warnings;
  report.shortfall = spectrum.shortfall();

  std::vector<double> oracle;
  if (!spectrum.states.empty()) {
    try {
      oracle = oracle_window(v, report.grid, spectrum.states.size(), config.e_in);
    } catch (const Error& e) {
      report.warnings.push_back(std::string("oracle unavailable: ") + e.what());
    }
  }

  for (std::size_t m = 0; m < spectrum.states.size(); ++m) {
    StateReport state;
    state.numerov = std::move(spectrum.states[m]);
    state.numerov.psi = normalize_amplitude(state.numerov.psi);
    auto normalized = normalize_quadrature(state.numerov.psi, report.grid);
    state.quadrature_integral = normalized.integral;
    state.psi_normalized = std::move(normalized.psi);
    std::vector<double> density(state.psi_normalized.size());
    for (std::size_t i = 0; i < density.size(); ++i) {
      density[i] = state.psi_normalized[i] * state.psi_normalized[i];
    }
    state.renormalized_integral = simpson_integral(density, report.grid.h);

    const std::uint64_t state_seed = options.seed + 2 * static_cast<std::uint64_t>(m);
    state.mc_integral = mc_norm_integral(state.numerov.psi, report.grid, options.mc_samples, 1.0,
                                         state_seed);
    state.mc_check = mc_check_probability(state.psi_normalized, report.grid, options.mc_samples,
                                          state_seed + 1);

    if (m < oracle.size()) state.oracle_energy = oracle[m];
    if (const auto& labeling = options.setup.analytic) {
      int level = labeling->level(static_cast<int>(m));
      if (labeling->system.kind == AnalyticKind::hydrogen) level += v.ell();
      try {
        state.analytic_energy = analytic_energy(labeling->system, level, v.ell());
        state.analytic_level = level;
      } catch (const Error&) {
        // level outside the closed-form spectrum (e.g. above dissociation)
      }
    }
    report.states.push_back(std::move(state));
  }
  report.total_seconds = seconds_since(start);
  return report;
}

nlohmann::json report_to_json(const RunReport& report, bool include_timing) {
  const auto& setup = report.setup;
  const auto& c = setup.config;
  nlohmann::json j;
  j["schema"] = "numerov-run-report/1";
  j["preset"] = setup.name;
  j["units"] = {{"energy", setup.potential.kind() == PotentialKind::hydrogen_reduced
                               ? "Rydberg (e^2/(2 a_B))"
                               : "dimensionless (reduced equation u'' + (E - V) u = 0)"},
                {"position", setup.potential.kind() == PotentialKind::hydrogen_reduced
                                 ? "Bohr radii"
                                 : "dimensionless"},
                {"rydberg_eV", UnitsInfo::rydberg_eV}};
  j["potential"] = potential_json(setup.potential);
  j["grid"] = {{"a", report.grid.a}, {"b", report.grid.b}, {"h", report.grid.h}, {"dim", report.grid.dim}};
  j["config"] = {{"delta_left", c.delta_left},
                 {"delta_right", c.delta_right},
                 {"eps", c.eps},
                 {"kmax", c.kmax},
                 {"nmax", c.nmax},
                 {"e_in", c.e_in},
                 {"v_max", c.v_max},
                 {"dE", c.dE},
                 {"scan_mode", to_string(c.scan_mode)},
                 {"kernel", to_string(c.kernel)}};
  j["seed"] = report.seed;
  j["normalization"] = {{"method", "simpson"},
                        {"monte_carlo_samples", report.mc_samples},
                        {"generator", "mt19937_64, 53-bit uniform"}};
  j["requested_states"] = c.nmax;
  j["found_states"] = report.states.size();
  j["shortfall"] = report.shortfall;
  j["warnings"] = report.warnings;

  nlohmann::json states = nlohmann::json::array();
  for (std::size_t m = 0; m < report.states.size(); ++m) {
    const auto& s = report.states[m];
    nlohmann::json energies = {{"numerov", s.numerov.energy}};
    nlohmann::json deviations = nlohmann::json::object();
    if (s.oracle_energy) {
      energies["oracle"] = *s.oracle_energy;
      deviations["numerov_vs_oracle"] = deviation(s.numerov.energy, *s.oracle_energy);
    }
    if (s.analytic_energy) {
      energies["analytic"] = *s.analytic_energy;
      deviations["numerov_vs_analytic"] = deviation(s.numerov.energy, *s.analytic_energy);
      if (s.oracle_energy) {
        deviations["oracle_vs_analytic"] = deviation(*s.oracle_energy, *s.analytic_energy);
      }
    }
    nlohmann::json entry = {{"index", m},
                            {"energy", energies},
                            {"deviation", deviations},
                            {"iterations", s.numerov.iterations},
                            {"final_mismatch", s.numerov.final_mismatch},
                            {"last_step", s.numerov.last_step},
                            {"converged", s.numerov.converged},
                            {"node_count", s.numerov.node_count},
                            {"normalization",
                             {{"simpson_integral", s.quadrature_integral},
                              {"renormalized_integral", s.renormalized_integral},
                              {"mc_integral", mc_json(s.mc_integral)},
                              {"mc_check", mc_json(s.mc_check)}}}};
    if (s.analytic_level) entry["analytic_level"] = *s.analytic_level;
    states.push_back(std::move(entry));
  }
  j["states"] = std::move(states);
  if (include_timing) {
    j["timing_seconds"] = {{"solve", report.solve_seconds}, {"total", report.total_seconds}};
  }
  return j;
}

}  // namespace numerov
