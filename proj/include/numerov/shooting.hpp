#pragma once

#include <cstddef>
#include <vector>

#include "numerov/grid.hpp"
#include "numerov/potential.hpp"
#include "numerov/solver_config.hpp"

namespace numerov {

/// Result of one two-sided shot at a fixed trial energy.
struct ShootingOutcome {
  double energy = 0.0;
  // Left branch (rescaled) below match_index, right branch from it onwards.
  std::vector<double> psi;
  std::size_t match_index = 0;
  double psi_match = 0.0;
  // Rescaled left branch at the match point; equals psi_match up to rounding.
  double left_match = 0.0;
  // Derivative mismatch f(E); NaN when diverged.
  double mismatch = 0.0;
  bool diverged = false;
};

/// Propagates from a with seeds (0, delta_left) and from b with seeds
/// (0, delta_right), rescales the left branch to meet the right one at the
/// match point and returns the central-difference derivative mismatch
///   f = [(L[m+1] - L[m-1]) - (R[m+1] - R[m-1])] / (2h).
///
/// Throws no_turning_point / turning_point_at_boundary from the match search
/// and unscalable_trial when the left branch vanishes at the match point.
/// Overflow is reported through `diverged`, not thrown.
ShootingOutcome shoot(const Grid& grid, const PotentialModel& v, double energy,
                      const SolverConfig& config);

}  // namespace numerov
