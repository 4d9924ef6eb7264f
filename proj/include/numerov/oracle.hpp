#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "numerov/grid.hpp"
#include "numerov/potential.hpp"

namespace numerov {

enum class AnalyticKind { hydrogen, morse, quantum_dot, harmonic, particle_in_box };

/// Closed-form spectra in the units of the reduced equation u'' + (E - V)u = 0.
struct AnalyticSystem {
  AnalyticKind kind = AnalyticKind::hydrogen;
  double depth = 16.0;     // morse
  double range = 2.0;      // morse
  double omega = 0.01;     // quantum dot
  double stiffness = 1.0;  // harmonic
  double length = 1.0;     // particle in a box
};

/// hydrogen: -1/n^2 (n >= 1, ell < n); morse: 2 a sqrt(D)(n+1/2) - a^2 (n+1/2)^2
/// for n + 1/2 < sqrt(D)/a; quantum dot: 2(n + ell + 1) omega; harmonic:
/// sqrt(k)(2n + 1); particle in a box: (n pi / L)^2 with n >= 1.
double analytic_energy(const AnalyticSystem& sys, int n, int ell = 0);

/// Symmetric tridiagonal matrix stored as diagonal and off-diagonal.
struct Tridiagonal {
  std::vector<double> diagonal;
  std::vector<double> off_diagonal;  // size n-1
};

/// -u'' + V u on the grid interior with u = 0 at both grid ends, using the
/// three-point Laplacian.
Tridiagonal finite_difference_hamiltonian(const PotentialModel& v, const Grid& grid);

/// Number of eigenvalues strictly below `lambda` (Sturm sequence count).
std::size_t sturm_count(const Tridiagonal& t, double lambda);

/// The k smallest eigenvalues, each bisected to absolute width <= tolerance.
std::vector<double> tridiagonal_eigenvalues(const Tridiagonal& t, std::size_t k,
                                            double tolerance = 1e-10);

/// Independent check on the shooting solver: k lowest eigenvalues of the
/// finite-difference Hamiltonian. Accurate to O(h^2).
std::vector<double> oracle_spectrum(const PotentialModel& v, const Grid& grid, std::size_t k);

}  // namespace numerov
