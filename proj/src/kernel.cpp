#include "numerov/kernel.hpp"

#include <cmath>

#include "numerov/error.hpp"

namespace numerov {
namespace {

constexpr double kSingularDenominator = 1e-12;
constexpr double kDivergenceLimit = 1e300;

double checked_divide(double numerator, double denominator) {
  if (!(std::abs(denominator) >= kSingularDenominator)) {
    throw Error(ErrorCode::singular_step, "Numerov step denominator vanishes", denominator);
  }
  return numerator / denominator;
}

}  // namespace

double step_standard(double y0, double y1, const StepCoefficients& c) {
  const double w = c.h * c.h / 12.0;
  const double p0 = 1.0 + w * c.q0;
  const double p1 = 2.0 * (1.0 - 5.0 * w * c.q1);
  const double p2 = 1.0 + w * c.q2;
  return checked_divide(p1 * y1 - p0 * y0, p2);
}

double step_generalized(double y0, double y1, const StepCoefficients& c) {
  const double w = c.h * c.h / 12.0;
  const double half_ph = 0.5 * c.p * c.h;
  const double p0 = 1.0 - half_ph + (c.q0 + c.dp) * w;
  const double p1 = 2.0 * (1.0 - (c.q1 - c.dp / 5.0) * 5.0 * w);
  const double p2 = 1.0 + half_ph + (c.q2 + c.dp) * w;
  return checked_divide(p1 * y1 - p0 * y0, p2);
}

std::vector<double> propagate_profile(Sweep sweep, std::span<const double> kinetic,
                                      std::span<const double> drift,
                                      std::span<const double> drift_slope, double h,
                                      double seed0, double seed1, std::size_t stop_index) {
  const std::size_t dim = kinetic.size();
  if (dim < 4 || stop_index < 1 || stop_index + 2 > dim) {
    throw Error(ErrorCode::domain, "propagation stop index outside the grid",
                static_cast<double>(stop_index));
  }
  if (!std::isfinite(seed0) || !std::isfinite(seed1)) {
    throw Error(ErrorCode::domain, "propagation seeds must be finite");
  }
  const bool generalized = !drift.empty();
  if (generalized && (drift.size() != dim || drift_slope.size() != dim)) {
    throw Error(ErrorCode::domain, "drift profile does not match the grid");
  }

  std::vector<double> y(dim, 0.0);
  auto advance = [&](std::size_t trail, std::size_t centre, std::size_t lead, double sign) {
    StepCoefficients c{kinetic[trail], kinetic[centre], kinetic[lead], h};
    double next = 0.0;
    if (generalized) {
      c.p = sign * drift[centre];
      c.dp = drift_slope[centre];
      next = step_generalized(y[trail], y[centre], c);
    } else {
      next = step_standard(y[trail], y[centre], c);
    }
    if (!(std::abs(next) <= kDivergenceLimit)) {
      throw Error(ErrorCode::diverged, "Numerov propagation overflowed", static_cast<double>(lead));
    }
    y[lead] = next;
  };

  if (sweep == Sweep::from_lower_bound) {
    y[0] = seed0;
    y[1] = seed1;
    for (std::size_t i = 2; i <= stop_index + 1; ++i) advance(i - 2, i - 1, i, 1.0);
  } else {
    y[dim - 1] = seed0;
    y[dim - 2] = seed1;
    for (std::size_t i = dim - 2; i-- > stop_index - 1;) advance(i + 2, i + 1, i, -1.0);
  }
  return y;
}

std::vector<double> propagate(Sweep sweep, const Grid& grid, double energy,
                              const PotentialModel& v, double seed0, double seed1,
                              std::size_t stop_index, KernelKind kernel) {
  const auto kinetic = kinetic_profile(v, energy, grid);
  if (kernel == KernelKind::generalized) {
    std::vector<double> drift(grid.dim, 0.0);
    std::vector<double> slope(grid.dim, 0.0);
    if (v.has_radial_drift()) {
      for (std::size_t i = 0; i < grid.dim; ++i) {
        const double x = grid.point(i);
        drift[i] = 2.0 / x;
        slope[i] = -2.0 / (x * x);
      }
    }
    return propagate_profile(sweep, kinetic, drift, slope, grid.h, seed0, seed1, stop_index);
  }
  return propagate_profile(sweep, kinetic, {}, {}, grid.h, seed0, seed1, stop_index);
}

}  // namespace numerov
