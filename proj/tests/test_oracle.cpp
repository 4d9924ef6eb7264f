#include <doctest.h>

#include <cmath>
#include <numbers>

#include "numerov/error.hpp"
#include "numerov/grid.hpp"
#include "numerov/oracle.hpp"
#include "numerov/presets.hpp"
#include "numerov/run.hpp"

using namespace numerov;

TEST_SUITE("oracle") {

TEST_CASE("analytic energies") {
  const AnalyticSystem hydrogen{AnalyticKind::hydrogen};
  CHECK(analytic_energy(hydrogen, 1) == -1.0);
  CHECK(analytic_energy(hydrogen, 2) == -0.25);
  CHECK(analytic_energy(hydrogen, 3, 2) == doctest::Approx(-1.0 / 9.0));
  CHECK_THROWS_AS(analytic_energy(hydrogen, 2, 2), Error);

  const AnalyticSystem morse{AnalyticKind::morse};
  CHECK(analytic_energy(morse, 0) == doctest::Approx(7.0));
  CHECK(analytic_energy(morse, 1) == doctest::Approx(15.0));
  CHECK_THROWS_AS(analytic_energy(morse, 2), Error);

  const AnalyticSystem dot{AnalyticKind::quantum_dot};
  CHECK(analytic_energy(dot, 4) == doctest::Approx(0.1));

  const AnalyticSystem spring{AnalyticKind::harmonic};
  CHECK(analytic_energy(spring, 3) == doctest::Approx(7.0));

  AnalyticSystem box{AnalyticKind::particle_in_box};
  box.length = 2.0;
  CHECK(analytic_energy(box, 2) == doctest::Approx(std::numbers::pi * std::numbers::pi));
}

TEST_CASE("discrete Laplacian ground state") {
  const auto g = build_grid(0.0, 1.01, 0.01);
  REQUIRE(g.dim == 101);
  const auto flat = PotentialModel::tabulated({-1.0, 2.0}, {0.0, 0.0});
  const auto values = oracle_spectrum(flat, g, 1);
  REQUIRE(values.size() == 1);
  CHECK(values[0] == doctest::Approx(9.868792685368).epsilon(1e-11));
}

TEST_CASE("sturm count brackets every computed eigenvalue") {
  const auto setup = load_preset("harmonic-test");
  const auto g = setup.grid();
  const auto t = finite_difference_hamiltonian(setup.potential, g);
  const auto values = tridiagonal_eigenvalues(t, 6);
  for (std::size_t k = 0; k < values.size(); ++k) {
    CHECK(sturm_count(t, values[k] - 1e-8) == k);
    CHECK(sturm_count(t, values[k] + 1e-8) == k + 1);
  }
}

TEST_CASE("diagonal shift moves every eigenvalue") {
  const auto setup = load_preset("harmonic-test");
  auto t = finite_difference_hamiltonian(setup.potential, setup.grid());
  const auto before = tridiagonal_eigenvalues(t, 4);
  for (auto& d : t.diagonal) d += 2.5;
  const auto after = tridiagonal_eigenvalues(t, 4);
  for (std::size_t k = 0; k < 4; ++k) CHECK(after[k] == doctest::Approx(before[k] + 2.5).epsilon(1e-10));
}

TEST_CASE("oracle converges quadratically on the harmonic well") {
  auto err = [](double h) {
    const auto g = build_grid(-6.0, 6.0, h);
    return std::abs(oracle_spectrum(PotentialModel::harmonic(), g, 1)[0] - 1.0);
  };
  const double ratio = err(0.02) / err(0.01);
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.05));
}

TEST_CASE("oracle window drops levels below the floor") {
  const auto setup = load_preset("qdot");
  const auto values =
      oracle_window(setup.potential, setup.grid(), 5, setup.config.e_in);
  REQUIRE(values.size() == 5);
  CHECK(values.front() >= setup.config.e_in);
  CHECK(values[0] == doctest::Approx(0.1048).epsilon(2e-3));
}

TEST_CASE("requests larger than the matrix are rejected") {
  const auto g = build_grid(0.0, 1.0, 0.1);
  const auto t = finite_difference_hamiltonian(PotentialModel::harmonic(), g);
  CHECK_THROWS_AS(tridiagonal_eigenvalues(t, 100), Error);
}

}  // TEST_SUITE
