#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "numerov/grid.hpp"
#include "numerov/oracle.hpp"
#include "numerov/potential.hpp"
#include "numerov/solver_config.hpp"

namespace numerov {

/// Maps state m (0-based, in energy order) to the analytic level n = first_n + m * n_stride.
struct AnalyticLabeling {
  AnalyticSystem system;
  int first_n = 0;
  int n_stride = 1;

  int level(int state) const noexcept { return first_n + state * n_stride; }
};

/// Everything a run needs: domain, potential, solver settings and the
/// closed-form spectrum to compare against (if any).
struct RunSetup {
  std::string name = "custom";
  double a = 0.0;
  double b = 1.0;
  double h = 0.01;
  PotentialModel potential = PotentialModel::harmonic();
  SolverConfig config;
  std::optional<AnalyticLabeling> analytic;

  Grid grid() const { return build_grid(a, b, h); }
};

std::vector<std::string> preset_names();

/// hydrogen, morse, qdot or harmonic-test. `paper_literal` switches the
/// quantum dot to its linear confinement term. Unknown names throw
/// Error(usage).
RunSetup load_preset(std::string_view name, bool paper_literal = false);

/// Applies `key = value` lines (listing variable names: a, b, h, delta, eps,
/// kmax, nmax, Ein, Vmax, dE, plus potential selection keys) on top of
/// `base`. '#' starts a comment.
RunSetup apply_config_text(RunSetup base, std::string_view text);
RunSetup apply_config_file(RunSetup base, const std::filesystem::path& path);

}  // namespace numerov
