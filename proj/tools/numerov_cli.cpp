#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "numerov/error.hpp"
#include "numerov/export.hpp"
#include "numerov/oracle.hpp"
#include "numerov/presets.hpp"
#include "numerov/run.hpp"
#include "numerov/spectrum.hpp"

namespace {

enum ExitCode : int { kOk = 0, kSolverError = 1, kUsage = 2, kPartial = 3, kIo = 4 };

struct Flags {
  std::string preset;
  std::string config;
  std::string out;
  std::uint64_t seed = 12345;
  std::string mode;
  std::string kernel;
  bool paper_literal = false;
  bool no_timing = false;
  bool symmetric_seeds = false;
  bool svg = false;
  bool json = false;
  std::optional<int> nmax;
  std::optional<double> h;
  std::optional<int> ell;
  unsigned threads = 0;
  std::int64_t mc_samples = 10000;
};

numerov::RunSetup resolve_setup(const Flags& f) {
  using numerov::Error;
  using numerov::ErrorCode;
  if (f.preset.empty() && f.config.empty()) {
    throw Error(ErrorCode::usage, "one of --preset or --config is required");
  }
  numerov::RunSetup setup;
  if (!f.preset.empty()) {
    setup = numerov::load_preset(f.preset, f.paper_literal);
  } else {
    setup = numerov::load_preset("harmonic-test");
    setup.name = "custom";
  }
  if (!f.config.empty()) setup = numerov::apply_config_file(std::move(setup), f.config);
  if (f.paper_literal && setup.potential.kind() == numerov::PotentialKind::quantum_dot) {
    setup.potential = numerov::effective_potential(
        numerov::PotentialModel::quantum_dot(setup.potential.omega(), 1), setup.potential.ell());
  }
  auto& c = setup.config;
  if (f.mode == "paper-steps") c.scan_mode = numerov::ScanMode::paper_steps;
  else if (f.mode == "auto") c.scan_mode = numerov::ScanMode::auto_bracket;
  if (f.kernel == "generalized") c.kernel = numerov::KernelKind::generalized;
  else if (f.kernel == "standard") c.kernel = numerov::KernelKind::standard;
  if (f.symmetric_seeds) c.delta_right = c.delta_left;
  if (f.nmax) c.nmax = *f.nmax;
  if (f.h) setup.h = *f.h;
  if (f.ell) setup.potential = numerov::effective_potential(setup.potential, *f.ell);
  c.threads = f.threads;
  c.validate();
  return setup;
}

std::string cell(const std::optional<double>& v) {
  if (!v) return "-";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.8f", *v);
  return buf;
}

void print_states(const numerov::RunReport& report) {
  std::printf("# %s: %s\n", report.setup.name.c_str(), report.setup.potential.description().c_str());
  std::printf("# grid a=%g b=%g h=%g dim=%zu, mode=%s\n", report.grid.a, report.grid.b,
              report.grid.h, report.grid.dim,
              report.setup.config.scan_mode == numerov::ScanMode::auto_bracket ? "auto" : "paper-steps");
  std::printf("%5s %16s %16s %16s %6s %6s %9s %12s\n", "state", "numerov", "oracle", "analytic",
              "nodes", "iters", "converged", "mc_check");
  for (std::size_t m = 0; m < report.states.size(); ++m) {
    const auto& s = report.states[m];
    std::printf("%5zu %16s %16s %16s %6d %6d %9s %12.5f\n", m + 1,
                cell(s.numerov.energy).c_str(), cell(s.oracle_energy).c_str(),
                cell(s.analytic_energy).c_str(), s.numerov.node_count, s.numerov.iterations,
                s.numerov.converged ? "yes" : "no", s.mc_check.integral);
  }
  for (const auto& w : report.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

int run_solve(const Flags& f, bool compare_only) {
  numerov::RunOptions options{resolve_setup(f), f.seed, f.mc_samples};
  const auto report = numerov::run_solve(options);
  if (f.json) {
    std::cout << numerov::report_to_json(report, !f.no_timing).dump(2) << '\n';
  } else {
    print_states(report);
  }
  if (!f.out.empty() && !compare_only) {
    numerov::export_run(report, f.out, {!f.no_timing, f.svg});
  }
  return report.exit_code();
}

int run_scan(const Flags& f) {
  const auto setup = resolve_setup(f);
  const auto samples = numerov::scan_mismatch(setup.grid(), setup.potential, setup.config);
  std::string text = "# E f(E) match_index status\n";
  for (const auto& s : samples) {
    text += numerov::format_number(s.energy) + ' ' + numerov::format_number(s.mismatch) + ' ' +
            std::to_string(s.match_index) + ' ' + s.status + '\n';
  }
  if (f.out.empty()) {
    std::cout << text;
  } else {
    std::filesystem::create_directories(f.out);
    numerov::write_text_file(std::filesystem::path(f.out) / "scan.dat", text);
  }
  return kOk;
}

int run_potential(const Flags& f) {
  const auto setup = resolve_setup(f);
  const auto grid = setup.grid();
  if (f.out.empty()) {
    std::printf("# x V(x)\n");
    for (std::size_t i = 0; i < grid.dim; ++i) {
      try {
        const double v = setup.potential.evaluate(grid.point(i));
        std::printf("%s %s\n", numerov::format_number(grid.point(i)).c_str(),
                    numerov::format_number(v).c_str());
      } catch (const numerov::Error&) {
      }
    }
  } else {
    std::filesystem::create_directories(f.out);
    numerov::write_potential_table(std::filesystem::path(f.out) / "potential.dat", grid,
                                   setup.potential);
  }
  return kOk;
}

int run_oracle(const Flags& f) {
  const auto setup = resolve_setup(f);
  const auto values = numerov::oracle_window(setup.potential, setup.grid(),
                                             static_cast<std::size_t>(setup.config.nmax),
                                             setup.config.e_in);
  std::printf("# finite-difference oracle, %zu lowest eigenvalues above E_in=%g\n", values.size(),
              setup.config.e_in);
  for (std::size_t m = 0; m < values.size(); ++m) {
    std::printf("%zu %s\n", m + 1, numerov::format_number(values[m]).c_str());
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Numerov shooting eigensolver for 1-D and radial Schroedinger equations"};
  app.require_subcommand(1);
  app.fallthrough();
  Flags f;

  const std::string presets = "hydrogen|morse|qdot|harmonic-test";
  app.add_option("--preset", f.preset, "Built-in problem: " + presets);
  app.add_option("--config", f.config, "key = value config file (a, b, h, delta, eps, kmax, ...)");
  app.add_option("--out", f.out, "Output directory for report and data files");
  app.add_option("--seed", f.seed, "Monte Carlo seed");
  app.add_option("--mode", f.mode, "Energy search: auto|paper-steps")
      ->check(CLI::IsMember({"auto", "paper-steps"}));
  app.add_option("--kernel", f.kernel, "Numerov kernel: standard|generalized")
      ->check(CLI::IsMember({"standard", "generalized"}));
  app.add_flag("--paper-literal", f.paper_literal, "Quantum dot with the linear omega^2 x term");
  app.add_flag("--no-timing", f.no_timing, "Omit timing fields from the JSON report");
  app.add_flag("--symmetric-seeds", f.symmetric_seeds, "Use the left seed amplitude on the right too");
  app.add_flag("--svg", f.svg, "Also write plot.svg");
  app.add_flag("--json", f.json, "Print the JSON report instead of the table");
  app.add_option("--nmax", f.nmax, "Number of states");
  app.add_option("--step", f.h, "Grid step h override");
  app.add_option("--ell", f.ell, "Angular momentum");
  app.add_option("--threads", f.threads, "Scan worker threads (0 = hardware)");
  app.add_option("--mc-samples", f.mc_samples, "Monte Carlo samples per estimate");

  auto* solve = app.add_subcommand("solve", "Find the lowest states, normalize and compare");
  auto* scan = app.add_subcommand("scan", "Tabulate the mismatch f(E) over [Ein, Vmax)");
  auto* potential = app.add_subcommand("potential", "Tabulate V(x) on the grid");
  auto* oracle = app.add_subcommand("oracle", "Finite-difference oracle eigenvalues only");
  auto* compare = app.add_subcommand("compare", "Joint numerov / oracle / analytic table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (solve->parsed()) return run_solve(f, false);
    if (compare->parsed()) return run_solve(f, true);
    if (scan->parsed()) return run_scan(f);
    if (potential->parsed()) return run_potential(f);
    if (oracle->parsed()) return run_oracle(f);
  } catch (const numerov::Error& e) {
    std::fprintf(stderr, "error: %s: %s\n", std::string(e.reason()).c_str(), e.what());
    switch (e.code()) {
      case numerov::ErrorCode::usage: return kUsage;
      case numerov::ErrorCode::io: return kIo;
      default: return kSolverError;
    }
  } catch (const std::filesystem::filesystem_error& e) {
    std::fprintf(stderr, "error: io_error: %s\n", e.what());
    return kIo;
  }
  return kUsage;
}
