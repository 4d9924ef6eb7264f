#include "numerov/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "numerov/error.hpp"

namespace numerov {

double analytic_energy(const AnalyticSystem& sys, int n, int ell) {
  if (ell < 0) throw Error(ErrorCode::domain, "ell must be non-negative", ell);
  switch (sys.kind) {
    case AnalyticKind::hydrogen:
      if (n < 1 || ell >= n) throw Error(ErrorCode::domain, "hydrogen needs n >= 1 and ell < n", n);
      return -1.0 / (static_cast<double>(n) * n);
    case AnalyticKind::morse: {
      const double nu = n + 0.5;
      if (n < 0 || nu >= std::sqrt(sys.depth) / sys.range) {
        throw Error(ErrorCode::domain, "morse level above dissociation", n);
      }
      return 2.0 * sys.range * std::sqrt(sys.depth) * nu - sys.range * sys.range * nu * nu;
    }
    case AnalyticKind::quantum_dot:
      if (n < 0) throw Error(ErrorCode::domain, "quantum dot needs n >= 0", n);
      return 2.0 * (n + ell + 1) * sys.omega;
    case AnalyticKind::harmonic:
      if (n < 0) throw Error(ErrorCode::domain, "harmonic needs n >= 0", n);
      return std::sqrt(sys.stiffness) * (2.0 * n + 1.0);
    case AnalyticKind::particle_in_box: {
      if (n < 1) throw Error(ErrorCode::domain, "particle in a box needs n >= 1", n);
      const double k = n * std::numbers::pi / sys.length;
      return k * k;
    }
  }
  throw Error(ErrorCode::domain, "unknown analytic system");
}

Tridiagonal finite_difference_hamiltonian(const PotentialModel& v, const Grid& grid) {
  const std::size_t interior = grid.dim - 2;
  const double inv_h2 = 1.0 / (grid.h * grid.h);
  Tridiagonal t;
  t.diagonal.resize(interior);
  t.off_diagonal.assign(interior - 1, -inv_h2);
  for (std::size_t i = 0; i < interior; ++i) {
    const double potential = v.evaluate(grid.point(i + 1));
    if (!std::isfinite(potential)) {
      throw Error(ErrorCode::domain, "potential is not finite on the grid interior", grid.point(i + 1));
    }
    t.diagonal[i] = 2.0 * inv_h2 + potential;
  }
  return t;
}

std::size_t sturm_count(const Tridiagonal& t, double lambda) {
  // LDL^T pivots of T - lambda I; each negative pivot is one eigenvalue below lambda.
  std::size_t count = 0;
  double pivot = 1.0;
  for (std::size_t i = 0; i < t.diagonal.size(); ++i) {
    const double coupling = i == 0 ? 0.0 : t.off_diagonal[i - 1] * t.off_diagonal[i - 1] / pivot;
    pivot = t.diagonal[i] - lambda - coupling;
    if (pivot == 0.0) pivot = -std::numeric_limits<double>::epsilon() * (std::abs(lambda) + 1.0);
    if (pivot < 0.0) ++count;
  }
  return count;
}

std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t, std::size_t k,
                                            double tolerance) {
  const std::size_t n = t.diagonal.size();
  if (k == 0 || k > n) {
    throw Error(ErrorCode::domain, "requested eigenvalue count exceeds the matrix dimension",
                static_cast<double>(k));
  }
  // Gershgorin bounds.
  double lower = std::numeric_limits<double>::infinity();
  double upper = -lower;
  for (std::size_t i = 0; i < n; ++i) {
    const double radius = (i > 0 ? std::abs(t.off_diagonal[i - 1]) : 0.0) +
                          (i + 1 < n ? std::abs(t.off_diagonal[i]) : 0.0);
    lower = std::min(lower, t.diagonal[i] - radius);
    upper = std::max(upper, t.diagonal[i] + radius);
  }
  const double pad = tolerance + 1e-12 * std::max(std::abs(lower), std::abs(upper));
  lower -= pad;
  upper += pad;

  std::vector<double> values(k);
  for (std::size_t j = 0; j < k; ++j) {
    // j-th eigenvalue: smallest lambda with more than j eigenvalues below it.
    double lo = j > 0 ? values[j - 1] - tolerance : lower;
    double hi = upper;
    while (hi - lo > tolerance) {
      const double mid = 0.5 * (lo + hi);
      if (mid <= lo || mid >= hi) break;
      if (sturm_count(t, mid) > j) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    values[j] = 0.5 * (lo + hi);
  }
  return values;
}

std::vector<double> oracle_spectrum(const PotentialModel& v, const Grid& grid, std::size_t k) {
  if (k < 1) throw Error(ErrorCode::domain, "oracle needs k >= 1");
  if (k > grid.dim - 2) {
    throw Error(ErrorCode::domain, "k exceeds the interior dimension", static_cast<double>(k));
  }
  return tridiagonal_eigenvalues(finite_difference_hamiltonian(v, grid), k);
}

}  // namespace numerov
