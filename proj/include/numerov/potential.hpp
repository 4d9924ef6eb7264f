#pragma once

#include <filesystem>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace numerov {

/// Energy scale metadata. Energies of the reduced equations are dimensionless;
/// the Coulomb preset measures them in Rydberg, positions in Bohr radii.
struct UnitsInfo {
  static constexpr double rydberg_eV = 13.605693122994;
  std::string description;
};

enum class PotentialKind { hydrogen_reduced, morse, quantum_dot, harmonic, tabulated };

std::string to_string(PotentialKind kind);

/// Effective potential V(x) entering u'' + (E - V(x)) u = 0.
///
/// Every kind carries an angular momentum ell; its centrifugal barrier
/// ell(ell+1)/x^2 is added once, inside evaluate(). Models are immutable
/// values and cheap to copy (tabulated data is shared).
class PotentialModel {
 public:
  /// -2/x, the reduced Coulomb potential in Rydberg units.
  static PotentialModel hydrogen(int ell = 0);
  /// depth * (1 - exp(-range * x))^2.
  static PotentialModel morse(double depth = 16.0, double range = 2.0);
  /// 1/x + omega^2 x^exponent - 0.25/x^2 with exponent 1 or 2.
  static PotentialModel quantum_dot(double omega = 0.01, int exponent = 2);
  /// stiffness * x^2.
  static PotentialModel harmonic(double stiffness = 1.0);
  /// Piecewise-linear interpolation through (x, v); x strictly increasing.
  static PotentialModel tabulated(std::vector<double> x, std::vector<double> v);
  /// Two-column whitespace-separated file, '#' starts a comment.
  static PotentialModel load_table(const std::filesystem::path& path);

  double evaluate(double x) const;
  double operator()(double x) const { return evaluate(x); }

  PotentialKind kind() const noexcept { return kind_; }
  int ell() const noexcept { return ell_; }

  double depth() const noexcept { return p0_; }
  double range() const noexcept { return p1_; }
  double omega() const noexcept { return p0_; }
  int exponent() const noexcept { return static_cast<int>(p1_); }
  double stiffness() const noexcept { return p0_; }

  /// True when x = 0 is a singular point (Coulomb, dot, or any ell > 0).
  bool singular_at_origin() const noexcept;
  /// True when the unreduced radial function obeys y'' + (2/x) y' + ... = 0,
  /// i.e. the generalized kernel applies with p(x) = 2/x.
  bool has_radial_drift() const noexcept { return kind_ == PotentialKind::hydrogen_reduced; }

  /// Tabulated range; infinite bounds for analytic kinds.
  double table_min() const noexcept;
  double table_max() const noexcept;

  std::string description() const;

 private:
  struct Table {
    std::vector<double> x;
    std::vector<double> v;
  };

  PotentialModel(PotentialKind kind, double p0, double p1)
      : kind_(kind), p0_(p0), p1_(p1) {}

  friend PotentialModel effective_potential(PotentialModel base, int ell);

  PotentialKind kind_;
  double p0_ = 0.0;
  double p1_ = 0.0;
  int ell_ = 0;
  std::shared_ptr<const Table> table_;
};

/// Returns `base` with angular momentum `ell`. The centrifugal term replaces
/// any barrier the base already carried, so it is never counted twice.
PotentialModel effective_potential(PotentialModel base, int ell);

/// Normal-form coefficient for y'' + P y' + Q y = 0:
/// q = Q - P^2/4 - P'/2, the coefficient of the first-derivative-free equation
/// satisfied by y * exp(1/2 * integral P).
double normal_form_q(const std::function<double(double)>& p,
                     const std::function<double(double)>& dp,
                     const std::function<double(double)>& q, double x);

}  // namespace numerov
