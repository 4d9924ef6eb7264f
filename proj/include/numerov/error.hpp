#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace numerov {

/// Machine-readable failure categories. Each maps to a stable snake_case
/// reason string that the CLI writes into reports and error messages.
enum class ErrorCode {
  domain,
  singular_step,
  diverged,
  no_turning_point,
  turning_point_at_boundary,
  unscalable_trial,
  stalled_secant,
  non_convergence,
  degenerate_function,
  biased_envelope,
  precondition,
  io,
  usage,
};

std::string_view reason(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, double detail = 0.0)
      : std::runtime_error(message), code_(code), detail_(detail) {}

  ErrorCode code() const noexcept { return code_; }
  std::string_view reason() const noexcept { return numerov::reason(code_); }

  // Numeric payload: best |dE| for non_convergence, offending value otherwise.
  double detail() const noexcept { return detail_; }

 private:
  ErrorCode code_;
  double detail_;
};

}  // namespace numerov
