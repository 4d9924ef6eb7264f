#include "numerov/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "numerov/error.hpp"

namespace numerov {
namespace {

constexpr std::int64_t kMinSamples = 100;

double unit_draw(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<double> normalize_amplitude(std::span<const double> psi) {
  const double peak = vec_max(psi);
  if (peak == 0.0) throw Error(ErrorCode::degenerate_function, "cannot normalize a zero function");
  std::vector<double> out(psi.begin(), psi.end());
  for (double& value : out) value /= peak;
  return out;
}

double simpson_integral(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  const std::size_t intervals = n - 1;
  const std::size_t simpson_end = intervals % 2 == 0 ? n - 1 : n - 2;
  double sum = 0.0;
  if (simpson_end >= 2) {
    double odd = 0.0;
    double even = 0.0;
    for (std::size_t i = 1; i < simpson_end; i += 2) odd += f[i];
    for (std::size_t i = 2; i < simpson_end; i += 2) even += f[i];
    sum = h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[simpson_end]);
  }
  if (simpson_end != n - 1) sum += 0.5 * h * (f[n - 2] + f[n - 1]);
  return sum;
}

QuadratureNormalized normalize_quadrature(std::span<const double> psi, const Grid& grid) {
  if (psi.size() != grid.dim) {
    throw Error(ErrorCode::domain, "function length does not match the grid");
  }
  std::vector<double> density(psi.size());
  std::transform(psi.begin(), psi.end(), density.begin(), [](double v) { return v * v; });
  const double integral = simpson_integral(density, grid.h);
  if (!(integral > 0.0) || !std::isfinite(integral)) {
    throw Error(ErrorCode::degenerate_function, "integral of psi^2 is not positive", integral);
  }
  QuadratureNormalized out{std::vector<double>(psi.begin(), psi.end()), integral};
  const double scale = 1.0 / std::sqrt(integral);
  for (double& v : out.psi) v *= scale;
  return out;
}

McEstimate mc_norm_integral(std::span<const double> psi, const Grid& grid, std::int64_t samples,
                            double envelope, std::uint64_t seed) {
  if (samples < kMinSamples) {
    throw Error(ErrorCode::precondition, "Monte Carlo needs at least 100 samples",
                static_cast<double>(samples));
  }
  if (psi.size() != grid.dim) {
    throw Error(ErrorCode::domain, "function length does not match the grid");
  }
  double peak = 0.0;
  for (double v : psi) peak = std::max(peak, v * v);
  if (!(envelope >= peak)) {
    throw Error(ErrorCode::biased_envelope, "envelope is below max(psi^2)", envelope);
  }

  McEstimate est;
  est.samples = samples;
  est.seed = seed;
  if (envelope == 0.0) return est;

  std::mt19937_64 gen(seed);
  const double n_points = static_cast<double>(psi.size());
  std::int64_t hits = 0;
  for (std::int64_t i = 0; i < samples; ++i) {
    const double y = envelope * unit_draw(gen);
    const auto j = std::min(static_cast<std::size_t>(unit_draw(gen) * n_points), psi.size() - 1);
    if (y <= psi[j] * psi[j]) ++hits;
  }
  const double area = envelope * (grid.b - grid.a);
  const double n = static_cast<double>(samples);
  est.efficiency = static_cast<double>(hits) / n;
  est.integral = area * est.efficiency;
  est.std_error = area / std::sqrt(n) * std::sqrt(est.efficiency * (1.0 - est.efficiency));
  return est;
}

McEstimate mc_check_probability(std::span<const double> normalized_psi, const Grid& grid,
                                std::int64_t samples, std::uint64_t seed) {
  const double peak = vec_max(normalized_psi);
  return mc_norm_integral(normalized_psi, grid, samples, peak * peak, seed);
}

}  // namespace numerov
