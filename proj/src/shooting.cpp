#include "numerov/shooting.hpp"

#include <cmath>
#include <limits>

#include "numerov/error.hpp"
#include "numerov/kernel.hpp"

namespace numerov {

ShootingOutcome shoot(const Grid& grid, const PotentialModel& v, double energy,
                      const SolverConfig& config) {
  const auto kinetic = kinetic_profile(v, energy, grid);
  const std::size_t m = find_match_point(kinetic);

  std::vector<double> drift;
  std::vector<double> slope;
  if (config.kernel == KernelKind::generalized) {
    drift.assign(grid.dim, 0.0);
    slope.assign(grid.dim, 0.0);
    if (v.has_radial_drift()) {
      for (std::size_t i = 0; i < grid.dim; ++i) {
        const double x = grid.point(i);
        drift[i] = 2.0 / x;
        slope[i] = -2.0 / (x * x);
      }
    }
  }

  ShootingOutcome out;
  out.energy = energy;
  out.match_index = m;

  std::vector<double> left;
  std::vector<double> right;
  try {
    left = propagate_profile(Sweep::from_lower_bound, kinetic, drift, slope, grid.h, 0.0,
                             config.delta_left, m);
    right = propagate_profile(Sweep::from_upper_bound, kinetic, drift, slope, grid.h, 0.0,
                              config.delta_right, m);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::diverged) throw;
    out.diverged = true;
    out.mismatch = std::numeric_limits<double>::quiet_NaN();
    return out;
  }

  if (left[m] == 0.0) {
    throw Error(ErrorCode::unscalable_trial, "left branch vanishes at the match point", energy);
  }
  const double scale = right[m] / left[m];
  for (std::size_t i = 0; i <= m + 1; ++i) left[i] *= scale;

  const double dl = left[m + 1] - left[m - 1];
  const double dr = right[m + 1] - right[m - 1];
  out.mismatch = (dl - dr) / (2.0 * grid.h);
  out.psi_match = right[m];
  out.left_match = left[m];

  out.psi.assign(grid.dim, 0.0);
  for (std::size_t i = 0; i < m; ++i) out.psi[i] = left[i];
  for (std::size_t i = m; i < grid.dim; ++i) out.psi[i] = right[i];
  if (!std::isfinite(out.mismatch)) {
    out.diverged = true;
    out.mismatch = std::numeric_limits<double>::quiet_NaN();
  }
  return out;
}

}  // namespace numerov
