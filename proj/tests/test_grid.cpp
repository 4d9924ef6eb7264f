#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "numerov/error.hpp"
#include "numerov/grid.hpp"

using namespace numerov;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected numerov::Error");
  return ErrorCode::usage;
}

}  // namespace

TEST_SUITE("grid") {

TEST_CASE("hydrogen listing grid") {
  const auto g = build_grid(0.001, 60.001, 0.01);
  CHECK(g.dim == 6000);
  CHECK(g.point(0) == 0.001);
  CHECK(g.point(5999) == doctest::Approx(59.991).epsilon(1e-14));
}

TEST_CASE("morse listing grid") {
  const auto g = build_grid(-1.01, 5.01, 0.006);
  CHECK(g.dim == 1003);
  CHECK(g.point(0) == -1.01);
}

TEST_CASE("grid errors") {
  CHECK(code_of([] { build_grid(0.0, 1.0, 0.5); }) == ErrorCode::domain);
  CHECK(code_of([] { build_grid(1.0, 0.0, 0.01); }) == ErrorCode::domain);
  CHECK(code_of([] { build_grid(0.0, 1.0, -0.01); }) == ErrorCode::domain);
  CHECK(code_of([] { build_grid(0.0, NAN, 0.01); }) == ErrorCode::domain);
}

TEST_CASE("points use index arithmetic and stay within one cell of b") {
  std::mt19937_64 gen(7);
  std::uniform_real_distribution<double> lower(-10.0, 10.0);
  std::uniform_real_distribution<double> width(0.5, 50.0);
  std::uniform_real_distribution<double> cells(8.5, 20000.0);
  for (int trial = 0; trial < 500; ++trial) {
    const double a = lower(gen);
    const double b = a + width(gen);
    const double h = (b - a) / cells(gen);
    const auto g = build_grid(a, b, h);
    const double last = g.point(g.dim - 1);
    // dim = floor((b - a)/h) places b between the last point plus one and two steps.
    CHECK(last < b);
    CHECK(last + h <= b + 1e-9 * h * g.dim);
    CHECK(b < last + 2.0 * h);
    CHECK(g.point(g.dim / 2) == a + static_cast<double>(g.dim / 2) * h);
  }
}

TEST_CASE("vec_max examples") {
  CHECK(vec_max(std::vector<double>{1, -3, 2}) == 3.0);
  CHECK(vec_max(std::vector<double>{0, 0, 0}) == 0.0);
  CHECK(vec_max(std::vector<double>{-0.5}) == 0.5);
  CHECK(code_of([] { vec_max(std::vector<double>{}); }) == ErrorCode::domain);
}

TEST_CASE("vec_max bounds every element and attains one") {
  std::mt19937_64 gen(11);
  std::normal_distribution<double> normal(0.0, 3.0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> s(1 + gen() % 50);
    for (auto& v : s) v = normal(gen);
    const double m = vec_max(s);
    bool attained = false;
    for (double v : s) {
      CHECK(m >= std::abs(v));
      attained = attained || m == std::abs(v);
    }
    CHECK(attained);
  }
}

TEST_CASE("match point for the Coulomb potential sits at x = 2 for E = -1") {
  const auto g = build_grid(0.001, 60.001, 0.01);
  const auto v = PotentialModel::hydrogen();
  const auto m = find_match_point(v, -1.0, g);
  CHECK(std::abs(g.point(m) - 2.0) <= g.h);
  CHECK(-1.0 - v(g.point(m - 1)) > 0.0);
  CHECK(-1.0 - v(g.point(m)) <= 0.0);
}

TEST_CASE("match point for Morse is the right turning point") {
  const auto g = build_grid(-1.01, 5.01, 0.006);
  const auto v = PotentialModel::morse();
  const double e = 7.138;
  const auto m = find_match_point(v, e, g);
  // 16(1 - exp(-2x))^2 = E  =>  x = -ln(1 - sqrt(E/16))/2 = 0.55119856...
  CHECK(std::abs(g.point(m) - 0.5511985622051584) <= g.h);
  CHECK(e >= v(g.point(m - 1)));
  CHECK(e <= v(g.point(m)));
}

TEST_CASE("match point errors") {
  const auto v = PotentialModel::hydrogen();
  const auto g = build_grid(0.5, 60.5, 0.01);
  CHECK(code_of([&] { find_match_point(v, -5.0, g); }) == ErrorCode::no_turning_point);
  // Crossing at x = 2/0.0334 ~ 59.9, within two points of b.
  const auto edge = build_grid(0.001, 60.001, 0.01);
  CHECK(code_of([&] { find_match_point(v, -2.0 / 59.985, edge); }) ==
        ErrorCode::turning_point_at_boundary);
  // Profile that turns forbidden at index 1.
  CHECK(code_of([] {
          find_match_point(std::vector<double>{1, -1, -1, -1, -1, -1, -1, -1});
        }) == ErrorCode::turning_point_at_boundary);
}

TEST_CASE("match point brackets the turning point for random energies") {
  const auto g = build_grid(-1.01, 5.01, 0.006);
  const auto v = PotentialModel::morse();
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> energy(0.5, 15.5);
  for (int trial = 0; trial < 100; ++trial) {
    const double e = energy(gen);
    const auto m = find_match_point(v, e, g);
    CHECK(e - v(g.point(m - 1)) > 0.0);
    CHECK(e - v(g.point(m)) <= 0.0);
  }
}

}  // TEST_SUITE
