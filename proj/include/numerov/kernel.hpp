#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "numerov/grid.hpp"
#include "numerov/potential.hpp"

namespace numerov {

/// Inputs of one three-point step producing y2 from (y0, y1).
///
/// q0, q1, q2 are s = E - V at the trailing, centre and leading points in
/// the direction of travel. p and dp are the first-derivative coefficient
/// p(x) and p'(x) at the centre, oriented along the direction of travel;
/// both are zero for the standard kernel.
struct StepCoefficients {
  double q0 = 0.0;
  double q1 = 0.0;
  double q2 = 0.0;
  double h = 0.0;
  double p = 0.0;
  double dp = 0.0;
};

/// y'' = -q y:  y2 = [2(1 - 5h^2 q1/12) y1 - (1 + h^2 q0/12) y0] / (1 + h^2 q2/12).
double step_standard(double y0, double y1, const StepCoefficients& c);

/// y'' = -p y' - s y with the p' curvature correction:
///   y2 = [2(1 - (q1 - p'/5) 5h^2/12) y1 - (1 - p h/2 + (q0 + p') h^2/12) y0]
///        / (1 + p h/2 + (q2 + p') h^2/12).
double step_generalized(double y0, double y1, const StepCoefficients& c);

enum class Sweep { from_lower_bound, from_upper_bound };
enum class KernelKind { standard, generalized };

/// Runs the recurrence across the grid starting from two seeds.
///
/// from_lower_bound seeds indices 0 and 1 and fills through stop_index + 1;
/// from_upper_bound seeds dim-1 and dim-2 and fills down to stop_index - 1.
/// Entries outside the propagated range are zero. With the generalized
/// kernel, p(x) = 2/x is used for potentials that carry a radial drift and
/// p = 0 otherwise.
std::vector<double> propagate(Sweep sweep, const Grid& grid, double energy,
                              const PotentialModel& v, double seed0, double seed1,
                              std::size_t stop_index, KernelKind kernel = KernelKind::standard);

/// Same recurrence over a precomputed E - V profile; `drift` holds p(x_i)
/// (empty for none). Used by the shooting code to avoid re-evaluating V.
std::vector<double> propagate_profile(Sweep sweep, std::span<const double> kinetic,
                                      std::span<const double> drift,
                                      std::span<const double> drift_slope, double h,
                                      double seed0, double seed1, std::size_t stop_index);

}  // namespace numerov
