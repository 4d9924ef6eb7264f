#include <doctest.h>

#include <cmath>
#include <random>

#include "numerov/error.hpp"
#include "numerov/presets.hpp"
#include "numerov/shooting.hpp"

using namespace numerov;

TEST_SUITE("shooting") {

TEST_CASE("mismatch vanishes near a harmonic eigenvalue") {
  const auto setup = load_preset("harmonic-test");
  const auto g = setup.grid();
  const auto out = shoot(g, setup.potential, 1.0, setup.config);
  CHECK_FALSE(out.diverged);
  CHECK(std::abs(out.mismatch) < 1e-3 * std::abs(out.psi_match));
  CHECK(out.psi.size() == g.dim);
  CHECK(std::abs(g.point(out.match_index) - 1.0) <= g.h);
}

TEST_CASE("left and right branches agree at the match point") {
  const auto setup = load_preset("harmonic-test");
  const auto g = setup.grid();
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> energy(0.2, 9.5);
  for (int i = 0; i < 50; ++i) {
    const auto out = shoot(g, setup.potential, energy(gen), setup.config);
    if (out.diverged) continue;
    CHECK(out.left_match == doctest::Approx(out.psi_match).epsilon(1e-12));
    CHECK(out.psi[out.match_index] == out.psi_match);
  }
}

TEST_CASE("seed scaling") {
  const auto setup = load_preset("harmonic-test");
  const auto g = setup.grid();
  std::mt19937_64 gen(17);
  std::uniform_real_distribution<double> energy(0.2, 9.5);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  for (int i = 0; i < 30; ++i) {
    const double e = energy(gen);
    const double s = scale(gen);
    auto scaled_left = setup.config;
    scaled_left.delta_left *= s;
    auto scaled_right = setup.config;
    scaled_right.delta_right *= s;
    const auto base = shoot(g, setup.potential, e, setup.config);
    const auto l = shoot(g, setup.potential, e, scaled_left);
    const auto r = shoot(g, setup.potential, e, scaled_right);
    // The left seed is absorbed by the rescaling; the right seed scales everything.
    CHECK(l.mismatch == doctest::Approx(base.mismatch).epsilon(1e-9).scale(1e-12));
    CHECK(r.mismatch == doctest::Approx(s * base.mismatch).epsilon(1e-9).scale(1e-12));
    CHECK(r.psi_match == doctest::Approx(s * base.psi_match).epsilon(1e-12));
  }
}

TEST_CASE("mismatch changes sign across each harmonic level") {
  const auto setup = load_preset("harmonic-test");
  const auto g = setup.grid();
  for (double level : {1.0, 3.0, 5.0, 7.0}) {
    const double below = shoot(g, setup.potential, level - 0.2, setup.config).mismatch;
    const double above = shoot(g, setup.potential, level + 0.2, setup.config).mismatch;
    CHECK(below * above < 0.0);
  }
}

TEST_CASE("hydrogen shot has the match point at the Coulomb turning point") {
  const auto setup = load_preset("hydrogen");
  const auto g = setup.grid();
  const auto out = shoot(g, setup.potential, -0.25, setup.config);
  CHECK(std::abs(g.point(out.match_index) - 8.0) <= g.h);
  CHECK(std::isfinite(out.mismatch));
}

TEST_CASE("energy without a turning point is rejected") {
  const auto setup = load_preset("harmonic-test");
  try {
    shoot(setup.grid(), setup.potential, -1.0, setup.config);
    FAIL("expected no_turning_point");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::no_turning_point);
    CHECK(e.reason() == std::string("no_turning_point"));
  }
}

}  // TEST_SUITE
