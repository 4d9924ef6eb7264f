#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "numerov/grid.hpp"

namespace numerov {

/// Hit-or-miss estimate of the integral of psi^2 over [a, b].
struct McEstimate {
  double integral = 0.0;
  double efficiency = 0.0;
  double std_error = 0.0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
};

/// psi / max|psi|.
std::vector<double> normalize_amplitude(std::span<const double> psi);

/// Composite Simpson rule on the grid samples; when the interval count is
/// odd the last interval uses the trapezoid rule.
double simpson_integral(std::span<const double> f, double h);

struct QuadratureNormalized {
  std::vector<double> psi;
  double integral = 0.0;  // of psi^2 before scaling
};

/// Scales psi so that the Simpson integral of psi^2 is 1.
QuadratureNormalized normalize_quadrature(std::span<const double> psi, const Grid& grid);

/// Draws `samples` pairs (y uniform in [0, envelope], j uniform grid index)
/// and counts y <= psi[j]^2. integral = envelope * (b - a) * hits / N and
/// std_error = envelope (b - a) / sqrt(N) * sqrt(eff (1 - eff)).
///
/// The generator is std::mt19937_64 seeded with `seed`; each draw uses the
/// top 53 bits of one output, u = (x >> 11) * 2^-53, and j = floor(u * dim).
/// Results are therefore bit-identical across platforms.
McEstimate mc_norm_integral(std::span<const double> psi, const Grid& grid, std::int64_t samples,
                            double envelope, std::uint64_t seed);

/// The same estimator with envelope max|psi|^2, for checking that an already
/// normalized function integrates to one.
McEstimate mc_check_probability(std::span<const double> normalized_psi, const Grid& grid,
                                std::int64_t samples, std::uint64_t seed);

}  // namespace numerov
