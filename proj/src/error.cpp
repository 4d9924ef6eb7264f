#include "numerov/error.hpp"

namespace numerov {

std::string_view reason(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::domain: return "domain_error";
    case ErrorCode::singular_step: return "singular_step";
    case ErrorCode::diverged: return "diverged";
    case ErrorCode::no_turning_point: return "no_turning_point";
    case ErrorCode::turning_point_at_boundary: return "turning_point_at_boundary";
    case ErrorCode::unscalable_trial: return "unscalable_trial";
    case ErrorCode::stalled_secant: return "stalled_secant";
    case ErrorCode::non_convergence: return "non_convergence";
    case ErrorCode::degenerate_function: return "degenerate_function";
    case ErrorCode::biased_envelope: return "biased_envelope";
    case ErrorCode::precondition: return "precondition_violated";
    case ErrorCode::io: return "io_error";
    case ErrorCode::usage: return "usage_error";
  }
  return "unknown";
}

}  // namespace numerov
