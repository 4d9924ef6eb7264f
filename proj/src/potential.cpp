#include "numerov/potential.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "numerov/error.hpp"

namespace numerov {

std::string to_string(PotentialKind kind) {
  switch (kind) {
    case PotentialKind::hydrogen_reduced: return "hydrogen_reduced";
    case PotentialKind::morse: return "morse";
    case PotentialKind::quantum_dot: return "quantum_dot";
    case PotentialKind::harmonic: return "harmonic";
    case PotentialKind::tabulated: return "tabulated";
  }
  return "unknown";
}

PotentialModel PotentialModel::hydrogen(int ell) {
  return effective_potential(PotentialModel(PotentialKind::hydrogen_reduced, 0.0, 0.0), ell);
}

PotentialModel PotentialModel::morse(double depth, double range) {
  if (!std::isfinite(depth) || !std::isfinite(range) || depth <= 0.0 || range <= 0.0) {
    throw Error(ErrorCode::domain, "morse: depth and range must be positive and finite");
  }
  return PotentialModel(PotentialKind::morse, depth, range);
}

PotentialModel PotentialModel::quantum_dot(double omega, int exponent) {
  if (!std::isfinite(omega) || omega <= 0.0) {
    throw Error(ErrorCode::domain, "quantum_dot: omega must be positive and finite");
  }
  if (exponent != 1 && exponent != 2) {
    throw Error(ErrorCode::domain, "quantum_dot: harmonic exponent must be 1 or 2");
  }
  return PotentialModel(PotentialKind::quantum_dot, omega, exponent);
}

PotentialModel PotentialModel::harmonic(double stiffness) {
  if (!std::isfinite(stiffness) || stiffness <= 0.0) {
    throw Error(ErrorCode::domain, "harmonic: stiffness must be positive and finite");
  }
  return PotentialModel(PotentialKind::harmonic, stiffness, 0.0);
}

PotentialModel PotentialModel::tabulated(std::vector<double> x, std::vector<double> v) {
  if (x.size() != v.size() || x.size() < 2) {
    throw Error(ErrorCode::domain, "tabulated: need at least two (x, V) pairs");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !std::isfinite(v[i])) {
      throw Error(ErrorCode::domain, "tabulated: non-finite entry");
    }
    if (i > 0 && !(x[i] > x[i - 1])) {
      throw Error(ErrorCode::domain, "tabulated: x must be strictly increasing");
    }
  }
  PotentialModel model(PotentialKind::tabulated, 0.0, 0.0);
  model.table_ = std::make_shared<const Table>(Table{std::move(x), std::move(v)});
  return model;
}

PotentialModel PotentialModel::load_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::io, "cannot open potential table " + path.string());
  }
  std::vector<double> xs;
  std::vector<double> vs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    double x = 0.0;
    double v = 0.0;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (!(fields >> x) || !(fields >> v)) {
      throw Error(ErrorCode::domain,
                  path.string() + ":" + std::to_string(lineno) + ": expected two columns");
    }
    xs.push_back(x);
    vs.push_back(v);
  }
  return tabulated(std::move(xs), std::move(vs));
}

bool PotentialModel::singular_at_origin() const noexcept {
  return ell_ > 0 || kind_ == PotentialKind::hydrogen_reduced ||
         kind_ == PotentialKind::quantum_dot;
}

double PotentialModel::table_min() const noexcept {
  return table_ ? table_->x.front() : -std::numeric_limits<double>::infinity();
}

double PotentialModel::table_max() const noexcept {
  return table_ ? table_->x.back() : std::numeric_limits<double>::infinity();
}

double PotentialModel::evaluate(double x) const {
  if (!std::isfinite(x)) {
    throw Error(ErrorCode::domain, "potential evaluated at non-finite position", x);
  }
  if (x == 0.0 && singular_at_origin()) {
    throw Error(ErrorCode::domain, "potential is singular at x = 0", x);
  }
  double v = 0.0;
  switch (kind_) {
    case PotentialKind::hydrogen_reduced:
      v = -2.0 / x;
      break;
    case PotentialKind::morse: {
      const double t = 1.0 - std::exp(-p1_ * x);
      v = p0_ * t * t;
      break;
    }
    case PotentialKind::quantum_dot: {
      const double confinement = exponent() == 1 ? x : x * x;
      v = 1.0 / x + p0_ * p0_ * confinement - 0.25 / (x * x);
      break;
    }
    case PotentialKind::harmonic:
      v = p0_ * x * x;
      break;
    case PotentialKind::tabulated: {
      const auto& tx = table_->x;
      const auto& tv = table_->v;
      if (x < tx.front() || x > tx.back()) {
        throw Error(ErrorCode::domain, "tabulated potential evaluated outside its table", x);
      }
      const auto hi = std::upper_bound(tx.begin(), tx.end(), x);
      const auto i = std::min(static_cast<std::size_t>(hi - tx.begin()), tx.size() - 1);
      const double w = (x - tx[i - 1]) / (tx[i] - tx[i - 1]);
      v = tv[i - 1] + w * (tv[i] - tv[i - 1]);
      break;
    }
  }
  if (ell_ > 0) v += ell_ * (ell_ + 1.0) / (x * x);
  return v;
}

std::string PotentialModel::description() const {
  std::ostringstream out;
  out.precision(17);
  switch (kind_) {
    case PotentialKind::hydrogen_reduced:
      out << "V(x) = -2/x";
      break;
    case PotentialKind::morse:
      out << "V(x) = " << p0_ << "*(1 - exp(-" << p1_ << "*x))^2";
      break;
    case PotentialKind::quantum_dot:
      out << "V(x) = 1/x + " << p0_ << "^2*x" << (exponent() == 2 ? "^2" : "") << " - 0.25/x^2";
      break;
    case PotentialKind::harmonic:
      out << "V(x) = " << p0_ << "*x^2";
      break;
    case PotentialKind::tabulated:
      out << "V(x) = linear interpolation of " << table_->x.size() << " samples";
      break;
  }
  if (ell_ > 0) out << " + " << ell_ * (ell_ + 1) << "/x^2";
  return out.str();
}

PotentialModel effective_potential(PotentialModel base, int ell) {
  if (ell < 0) {
    throw Error(ErrorCode::domain, "angular momentum must be non-negative", ell);
  }
  base.ell_ = ell;
  return base;
}

double normal_form_q(const std::function<double(double)>& p,
                     const std::function<double(double)>& dp,
                     const std::function<double(double)>& q, double x) {
  const double pv = p(x);
  const double dpv = dp(x);
  const double qv = q(x);
  const double result = qv - 0.25 * pv * pv - 0.5 * dpv;
  if (!std::isfinite(pv) || !std::isfinite(dpv) || !std::isfinite(qv) || !std::isfinite(result)) {
    throw Error(ErrorCode::domain, "normal_form_q: non-finite coefficient", x);
  }
  return result;
}

}  // namespace numerov
