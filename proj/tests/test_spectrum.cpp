#include <doctest.h>

#include <cmath>
#include <vector>

#include "numerov/error.hpp"
#include "numerov/presets.hpp"
#include "numerov/spectrum.hpp"

using namespace numerov;

TEST_SUITE("spectrum") {

TEST_CASE("secant update") {
  CHECK(secant_update(1.0, 0.0, 1.0, -1.0) == doctest::Approx(-0.5));
  CHECK(secant_update(2.0, 1.0, 3.0, 1.0) == doctest::Approx(-1.5));
  try {
    secant_update(1.0, 0.5, 2.0, 2.0);
    FAIL("expected stalled_secant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::stalled_secant);
  }
}

TEST_CASE("node counting") {
  CHECK(count_nodes(std::vector<double>{0, 1, -1, 1, 0}) == 2);
  CHECK(count_nodes(std::vector<double>{0, 1, 0, -1, 0}) == 1);
  CHECK(count_nodes(std::vector<double>{0, 1, 2, 1, 0}) == 0);
  CHECK_THROWS_AS(count_nodes(std::vector<double>{1, -1}), Error);
  CHECK_THROWS_AS(count_nodes(std::vector<double>{0, 0, 0, 0}), Error);
}

TEST_CASE("refinement converges on the harmonic ground state") {
  const auto setup = load_preset("harmonic-test");
  const auto pair = refine_eigenvalue(0.9, setup.grid(), setup.potential, setup.config);
  CHECK(pair.converged);
  CHECK(pair.energy == doctest::Approx(1.0).epsilon(1e-5));
  CHECK(pair.node_count == 0);
  CHECK(pair.last_step < setup.config.eps);
}

TEST_CASE("refinement reports non-convergence with the best step") {
  auto setup = load_preset("harmonic-test");
  setup.config.kmax = 2;
  try {
    refine_eigenvalue(0.5, setup.grid(), setup.potential, setup.config);
    FAIL("expected non_convergence");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::non_convergence);
    CHECK(e.detail() > setup.config.eps);
  }
}

TEST_CASE("harmonic ladder") {
  const auto setup = load_preset("harmonic-test");
  const auto result = scan_spectrum(setup.grid(), setup.potential, setup.config);
  REQUIRE(result.states.size() == 4);
  CHECK_FALSE(result.shortfall());
  for (int m = 0; m < 4; ++m) {
    CHECK(result.states[m].energy == doctest::Approx(2.0 * m + 1.0).epsilon(1e-5));
    CHECK(result.states[m].node_count == m);
  }
}

TEST_CASE("window with too few levels is a shortfall, not an error") {
  auto setup = load_preset("harmonic-test");
  setup.config.nmax = 6;
  setup.config.v_max = 8.0;
  const auto result = scan_spectrum(setup.grid(), setup.potential, setup.config);
  CHECK(result.states.size() == 4);
  CHECK(result.shortfall());
  CHECK_FALSE(result.warnings.empty());
}

TEST_CASE("parallel scan equals the serial scan") {
  auto setup = load_preset("morse");
  setup.config.threads = 1;
  const auto serial = scan_mismatch(setup.grid(), setup.potential, setup.config);
  setup.config.threads = 4;
  const auto parallel = scan_mismatch(setup.grid(), setup.potential, setup.config);
  REQUIRE(serial.size() == parallel.size());
  for (std::size_t i = 0; i < serial.size(); ++i) {
    CHECK(serial[i].energy == parallel[i].energy);
    CHECK(serial[i].status == parallel[i].status);
    if (serial[i].usable()) CHECK(serial[i].mismatch == parallel[i].mismatch);
  }
}

TEST_CASE("harmonic eigenvalue error is fourth order in h") {
  auto error_at = [](double h) {
    auto setup = load_preset("harmonic-test");
    setup.h = h;
    setup.config.eps = 1e-13;
    setup.config.nmax = 1;
    const auto result = scan_spectrum(setup.grid(), setup.potential, setup.config);
    REQUIRE(result.states.size() == 1);
    return std::abs(result.states[0].energy - 1.0);
  };
  const double ratio = error_at(0.1) / error_at(0.05);
  CHECK(ratio >= 8.0);
  CHECK(ratio <= 32.0);
}

TEST_CASE("replaying the fixed hydrogen schedule") {
  auto setup = load_preset("hydrogen");
  setup.config.scan_mode = ScanMode::paper_steps;
  const auto result = scan_spectrum(setup.grid(), setup.potential, setup.config);
  REQUIRE(result.states.size() == 3);
  CHECK(result.states[0].energy == doctest::Approx(-0.995).epsilon(1e-9));
  CHECK(result.states[1].energy == doctest::Approx(-0.245).epsilon(1e-9));
  CHECK(result.states[2].energy == doctest::Approx(-0.110).epsilon(1e-9));
}

TEST_CASE("replaying the fixed Morse schedule reports the last trial") {
  auto setup = load_preset("morse");
  setup.config.scan_mode = ScanMode::paper_steps;
  const auto result = scan_spectrum(setup.grid(), setup.potential, setup.config);
  REQUIRE(result.states.size() == 2);
  CHECK(result.states[0].energy == doctest::Approx(7.138).epsilon(1e-9));
  CHECK(result.states[1].energy == doctest::Approx(15.038).epsilon(1e-9));
  CHECK_FALSE(result.states[0].converged);
  CHECK_FALSE(result.warnings.empty());
}

TEST_CASE("fixed schedule is unavailable without a schedule") {
  auto setup = load_preset("harmonic-test");
  setup.config.scan_mode = ScanMode::paper_steps;
  CHECK_THROWS_AS(scan_spectrum(setup.grid(), setup.potential, setup.config), Error);
}

}  // TEST_SUITE
