#include "numerov/solver_config.hpp"

#include <cmath>

#include "numerov/error.hpp"

namespace numerov {

void SolverConfig::validate() const {
  auto require = [](bool ok, const char* what) {
    if (!ok) throw Error(ErrorCode::domain, std::string("invalid solver config: ") + what);
  };
  require(std::isfinite(delta_left) && delta_left != 0.0, "delta_left must be finite and nonzero");
  require(std::isfinite(delta_right) && delta_right != 0.0, "delta_right must be finite and nonzero");
  require(eps > 0.0 && std::isfinite(eps), "eps > 0");
  require(kmax >= 2, "kmax >= 2");
  require(nmax >= 1, "nmax >= 1");
  require(std::isfinite(e_in) && std::isfinite(v_max) && e_in < v_max, "e_in < v_max");
  require(dE > 0.0 && std::isfinite(dE), "dE > 0");
  require(paper_schedule.step_multiplier > 0.0, "paper step multiplier > 0");
}

}  // namespace numerov
