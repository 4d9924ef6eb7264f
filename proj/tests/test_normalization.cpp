#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "numerov/error.hpp"
#include "numerov/grid.hpp"
#include "numerov/normalization.hpp"

using namespace numerov;

namespace {

std::vector<double> sine_profile(const Grid& g) {
  std::vector<double> psi(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) psi[i] = std::sin(std::numbers::pi * g.point(i));
  return psi;
}

}  // namespace

TEST_SUITE("normalization") {

TEST_CASE("amplitude normalization") {
  const auto out = normalize_amplitude(std::vector<double>{1, -4, 2});
  CHECK(out == std::vector<double>{0.25, -1.0, 0.5});
  CHECK_THROWS_AS(normalize_amplitude(std::vector<double>{0, 0, 0}), Error);
}

TEST_CASE("amplitude normalization is idempotent") {
  std::mt19937_64 gen(8);
  std::normal_distribution<double> normal(0.0, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> psi(3 + gen() % 40);
    for (auto& v : psi) v = normal(gen);
    const auto once = normalize_amplitude(psi);
    CHECK(normalize_amplitude(once) == once);
    CHECK(vec_max(once) == 1.0);
  }
}

TEST_CASE("simpson integral") {
  const auto g = build_grid(0.0, 1.001, 0.001);
  REQUIRE(g.dim == 1001);
  const auto psi = sine_profile(g);
  CHECK(simpson_integral(psi, g.h) == doctest::Approx(2.0 / std::numbers::pi).epsilon(1e-11));
  // Odd interval count takes a trapezoid on the last interval.
  std::vector<double> line{0.0, 1.0, 2.0, 3.0};
  CHECK(simpson_integral(line, 1.0) == doctest::Approx(4.5));
}

TEST_CASE("quadrature normalization re-integrates to one") {
  const auto g = build_grid(0.0, 1.001, 0.001);
  const auto result = normalize_quadrature(sine_profile(g), g);
  CHECK(result.integral == doctest::Approx(0.5).epsilon(1e-9));
  std::vector<double> density(g.dim);
  for (std::size_t i = 0; i < g.dim; ++i) density[i] = result.psi[i] * result.psi[i];
  CHECK(std::abs(simpson_integral(density, g.h) - 1.0) <= 1e-8);
}

TEST_CASE("monte carlo is deterministic for a seed") {
  const auto g = build_grid(0.0, 1.001, 0.001);
  const auto psi = sine_profile(g);
  const auto a = mc_norm_integral(psi, g, 10000, 1.0, 42);
  const auto b = mc_norm_integral(psi, g, 10000, 1.0, 42);
  const auto c = mc_norm_integral(psi, g, 10000, 1.0, 43);
  CHECK(a.integral == b.integral);
  CHECK(a.std_error == b.std_error);
  CHECK(a.integral != c.integral);
  CHECK(a.samples == 10000);
  CHECK(a.seed == 42);
}

TEST_CASE("monte carlo preconditions") {
  const auto g = build_grid(0.0, 1.001, 0.001);
  const auto psi = sine_profile(g);
  try {
    mc_norm_integral(psi, g, 50, 1.0, 1);
    FAIL("expected precondition");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::precondition);
  }
  try {
    mc_norm_integral(psi, g, 1000, 0.5, 1);
    FAIL("expected biased_envelope");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::biased_envelope);
  }
  const std::vector<double> zero(g.dim, 0.0);
  const auto z = mc_norm_integral(zero, g, 1000, 0.0, 1);
  CHECK(z.integral == 0.0);
  CHECK(z.std_error == 0.0);
}

TEST_CASE("monte carlo agrees with quadrature within four standard errors") {
  const auto g = build_grid(0.0, 1.001, 0.001);
  const auto normalized = normalize_quadrature(sine_profile(g), g).psi;
  int inside = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto est = mc_check_probability(normalized, g, 10000, seed);
    if (std::abs(est.integral - 1.0) <= 4.0 * est.std_error) ++inside;
  }
  CHECK(inside >= 99);
}

}  // TEST_SUITE
