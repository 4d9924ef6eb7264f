#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "numerov/error.hpp"
#include "numerov/grid.hpp"
#include "numerov/potential.hpp"
#include "numerov/solver_config.hpp"

namespace numerov {

struct Eigenpair {
  double energy = 0.0;
  std::vector<double> psi;
  int node_count = 0;
  // Number of shots spent on this state.
  int iterations = 0;
  double final_mismatch = 0.0;
  // |dE| of the last secant step; below eps for converged states.
  double last_step = 0.0;
  // False only in paper_steps mode when the schedule exhausted kmax; the
  // energy is then the last trial energy, as the original listings report.
  bool converged = true;
};

struct SpectrumResult {
  std::vector<Eigenpair> states;
  int requested = 0;
  std::vector<std::string> warnings;

  bool shortfall() const noexcept { return static_cast<int>(states.size()) < requested; }
};

/// One point of the coarse mismatch scan. `status` is "ok" or an error reason.
struct ScanSample {
  double energy = 0.0;
  double mismatch = 0.0;
  std::size_t match_index = 0;
  std::string status;

  bool usable() const noexcept { return status == "ok"; }
};

/// Secant correction dE = -f (E - E_old) / (f - f_old). Throws stalled_secant
/// when f == f_old.
double secant_update(double energy, double energy_old, double f, double f_old);

/// Sign changes between consecutive nonzero samples.
int count_nodes(std::span<const double> psi);

/// Secant iteration from (seed, seed + dE) until |dE| < eps.
/// Throws non_convergence (detail = best |dE|) after kmax shots.
Eigenpair refine_eigenvalue(double energy_seed, const Grid& grid, const PotentialModel& v,
                            const SolverConfig& config);

/// f(E) at e_in, e_in + dE, ... below v_max. Points are evaluated on
/// config.threads workers; the result is ordered by energy.
std::vector<ScanSample> scan_mismatch(const Grid& grid, const PotentialModel& v,
                                      const SolverConfig& config);

/// The lowest nmax bound states between e_in and v_max, sorted by energy.
/// A shortfall is reported through the result, not thrown.
SpectrumResult scan_spectrum(const Grid& grid, const PotentialModel& v,
                             const SolverConfig& config);

}  // namespace numerov
