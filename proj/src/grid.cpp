#include "numerov/grid.hpp"

#include <algorithm>
#include <cmath>

#include "numerov/error.hpp"

namespace numerov {

std::vector<double> Grid::points() const {
  std::vector<double> xs(dim);
  for (std::size_t i = 0; i < dim; ++i) xs[i] = point(i);
  return xs;
}

Grid build_grid(double a, double b, double h) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(h)) {
    throw Error(ErrorCode::domain, "grid bounds and step must be finite");
  }
  if (h <= 0.0) throw Error(ErrorCode::domain, "grid step must be positive", h);
  if (b <= a) throw Error(ErrorCode::domain, "grid upper bound must exceed lower bound", b);
  // (b - a)/h is usually a decimal ratio such as 6000 that binary floating
  // point lands a few ulps below; the relative nudge keeps floor() on it.
  const double ratio = (b - a) / h;
  const auto dim = static_cast<std::size_t>(std::floor(ratio * (1.0 + 1e-12)));
  if (dim < 8) {
    throw Error(ErrorCode::domain, "grid has too few points (need at least 8)",
                static_cast<double>(dim));
  }
  return Grid{a, b, h, dim};
}

double vec_max(std::span<const double> samples) {
  if (samples.empty()) throw Error(ErrorCode::domain, "vec_max of an empty sequence");
  double best = 0.0;
  for (double s : samples) best = std::max(best, std::abs(s));
  return best;
}

std::vector<double> kinetic_profile(const PotentialModel& v, double energy, const Grid& grid) {
  std::vector<double> k(grid.dim);
  for (std::size_t i = 0; i < grid.dim; ++i) k[i] = energy - v.evaluate(grid.point(i));
  return k;
}

std::size_t find_match_point(std::span<const double> kinetic) {
  const std::size_t dim = kinetic.size();
  for (std::size_t j = 0; j + 1 < dim; ++j) {
    const double de1 = kinetic[j];
    const double de2 = kinetic[j + 1];
    if (de1 * de2 <= 0.0 && de1 > 0.0) {
      const std::size_t match = j + 1;
      if (match < 2 || match + 3 > dim) {
        throw Error(ErrorCode::turning_point_at_boundary,
                    "turning point too close to the grid boundary",
                    static_cast<double>(match));
      }
      return match;
    }
  }
  throw Error(ErrorCode::no_turning_point, "no classical turning point on the grid");
}

std::size_t find_match_point(const PotentialModel& v, double energy, const Grid& grid) {
  if (!std::isfinite(energy)) throw Error(ErrorCode::domain, "energy must be finite");
  return find_match_point(kinetic_profile(v, energy, grid));
}

}  // namespace numerov
