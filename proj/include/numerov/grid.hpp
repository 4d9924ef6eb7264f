#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "numerov/potential.hpp"

namespace numerov {

/// Uniform grid x_i = a + i*h, 0 <= i < dim, with dim = floor((b - a)/h).
struct Grid {
  double a = 0.0;
  double b = 0.0;
  double h = 0.0;
  std::size_t dim = 0;

  double point(std::size_t i) const noexcept { return a + static_cast<double>(i) * h; }
  std::vector<double> points() const;
};

Grid build_grid(double a, double b, double h);

/// Largest absolute value in `samples`.
double vec_max(std::span<const double> samples);

/// Samples E - V(x_i) on every grid point.
std::vector<double> kinetic_profile(const PotentialModel& v, double energy, const Grid& grid);

/// First classically allowed -> forbidden crossing scanning left to right:
/// the smallest j+1 with (E - V_j)(E - V_{j+1}) <= 0 and E - V_j > 0.
/// The result is kept at least two points away from either end.
std::size_t find_match_point(std::span<const double> kinetic);
std::size_t find_match_point(const PotentialModel& v, double energy, const Grid& grid);

}  // namespace numerov
