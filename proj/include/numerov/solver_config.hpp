#pragma once

#include <cstddef>
#include <vector>

#include "numerov/kernel.hpp"

namespace numerov {

enum class ScanMode { auto_bracket, paper_steps };

/// Energy jump applied after state M in the fixed-step schedule:
/// E <- (from_previous_trial ? E_old : E) + multiplier * dE.
struct ScheduleJump {
  bool from_previous_trial = false;
  double multiplier = 0.0;
};

/// Fixed-step energy walk of the original notebook listings. Within one
/// state every trial advances E by step_multiplier * dE; between states the
/// jumps apply in order, the last one repeating for any further states.
struct PaperSchedule {
  double step_multiplier = 1.0;
  std::vector<ScheduleJump> jumps;

  bool empty() const noexcept { return jumps.empty(); }
};

struct SolverConfig {
  double delta_left = 0.02;
  double delta_right = 0.04;
  double eps = 1e-4;
  int kmax = 300;
  int nmax = 3;
  double e_in = -1.6;
  double v_max = 0.0;
  double dE = 0.005;
  ScanMode scan_mode = ScanMode::auto_bracket;
  KernelKind kernel = KernelKind::standard;
  PaperSchedule paper_schedule;
  // Coarse-scan worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;

  /// Throws Error(domain) when an invariant is violated.
  void validate() const;
};

}  // namespace numerov
