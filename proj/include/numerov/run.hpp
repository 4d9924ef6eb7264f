#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "numerov/normalization.hpp"
#include "numerov/presets.hpp"
#include "numerov/spectrum.hpp"

namespace numerov {

struct RunOptions {
  RunSetup setup;
  std::uint64_t seed = 12345;
  std::int64_t mc_samples = 10000;
};

struct StateReport {
  Eigenpair numerov;  // psi holds the amplitude-normalized eigenfunction
  std::vector<double> psi_normalized;
  double quadrature_integral = 0.0;  // Simpson integral of the amplitude-normalized psi^2
  double renormalized_integral = 0.0;  // Simpson integral of psi_normalized^2
  McEstimate mc_integral;  // hit-or-miss on the amplitude-normalized function, envelope 1
  McEstimate mc_check;     // hit-or-miss on psi_normalized, envelope max psi^2
  std::optional<double> oracle_energy;
  std::optional<double> analytic_energy;
  std::optional<int> analytic_level;
};

struct RunReport {
  RunSetup setup;
  Grid grid;
  std::uint64_t seed = 0;
  std::int64_t mc_samples = 0;
  std::vector<StateReport> states;
  std::vector<std::string> warnings;
  bool shortfall = false;
  double solve_seconds = 0.0;
  double total_seconds = 0.0;

  /// 0 for a full spectrum, 3 for a partial one.
  int exit_code() const noexcept { return shortfall ? 3 : 0; }
};

/// Oracle eigenvalues at or above `floor`, the k lowest of them.
std::vector<double> oracle_window(const PotentialModel& v, const Grid& grid, std::size_t k,
                                  double floor);

/// scan_spectrum, then normalization and comparison against the oracle and
/// the closed-form spectrum.
RunReport run_solve(const RunOptions& options);

/// Stable report schema; see README for the key list.
nlohmann::json report_to_json(const RunReport& report, bool include_timing);

}  // namespace numerov
