#include "numerov/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <thread>

#include "numerov/shooting.hpp"

namespace numerov {
namespace {

constexpr int kRetries = 5;

bool retryable(ErrorCode code) {
  return code == ErrorCode::unscalable_trial || code == ErrorCode::singular_step;
}

// Shoots at `energy`, nudging it by dE/10 when the trial is unscalable or
// overflows. `energy` is updated to the energy actually used.
ShootingOutcome shoot_with_retry(const Grid& grid, const PotentialModel& v, double& energy,
                                 const SolverConfig& config, int& shots) {
  for (int attempt = 0;; ++attempt) {
    std::optional<Error> failure;
    try {
      ++shots;
      auto outcome = shoot(grid, v, energy, config);
      if (!outcome.diverged) return outcome;
      failure.emplace(ErrorCode::diverged, "propagation diverged", energy);
    } catch (const Error& e) {
      if (!retryable(e.code())) throw;
      failure.emplace(e);
    }
    if (attempt == kRetries) throw *failure;
    energy += config.dE / 10.0;
  }
}

Eigenpair finish(ShootingOutcome outcome, int shots, double last_step, bool converged) {
  Eigenpair pair;
  pair.energy = outcome.energy;
  pair.node_count = count_nodes(outcome.psi);
  pair.psi = std::move(outcome.psi);
  pair.iterations = shots;
  pair.final_mismatch = outcome.mismatch;
  pair.last_step = last_step;
  pair.converged = converged;
  return pair;
}

Eigenpair refine_from(double e0, double e1, const Grid& grid, const PotentialModel& v,
                      const SolverConfig& config) {
  int shots = 0;
  double energy_old = e0;
  double f_old = shoot_with_retry(grid, v, energy_old, config, shots).mismatch;
  double energy = e1;
  double best = std::numeric_limits<double>::infinity();
  while (shots < config.kmax) {
    auto outcome = shoot_with_retry(grid, v, energy, config, shots);
    const double f = outcome.mismatch;
    double step = 0.0;
    try {
      step = secant_update(energy, energy_old, f, f_old);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::stalled_secant) throw;
      energy_old = energy;
      energy += config.dE;
      continue;
    }
    best = std::min(best, std::abs(step));
    if (std::abs(step) < config.eps) {
      double final_energy = energy + step;
      try {
        auto last = shoot(grid, v, final_energy, config);
        ++shots;
        if (!last.diverged) return finish(std::move(last), shots, std::abs(step), true);
      } catch (const Error&) {
        // keep the outcome at `energy`, which is within eps
      }
      return finish(std::move(outcome), shots, std::abs(step), true);
    }
    energy_old = energy;
    f_old = f;
    energy += step;
  }
  throw Error(ErrorCode::non_convergence, "secant iteration exhausted kmax", best);
}

std::optional<Eigenpair> refine_bracket(const ScanSample& lo, const ScanSample& hi,
                                        const Grid& grid, const PotentialModel& v,
                                        const SolverConfig& config) {
  const double bound = std::min(std::abs(lo.mismatch), std::abs(hi.mismatch));
  auto is_root = [&](const Eigenpair& p) {
    return p.energy >= lo.energy - config.eps && p.energy <= hi.energy + config.eps &&
           std::abs(p.final_mismatch) <= bound;
  };

  const double mid = 0.5 * (lo.energy + hi.energy);
  try {
    auto pair = refine_from(mid, mid + config.dE / 10.0, grid, v, config);
    if (is_root(pair)) return pair;
  } catch (const Error&) {
    // fall through to the bracketed search
  }

  // Illinois false position, kept inside the bracket. A sign change produced
  // by a pole of f (left branch crossing zero at the match point) converges
  // onto the pole, where |f| grows instead of vanishing; is_root rejects it.
  double a = lo.energy, fa = lo.mismatch;
  double b = hi.energy, fb = hi.mismatch;
  int side = 0;
  int shots = 0;
  std::optional<ShootingOutcome> last;
  while (shots < config.kmax && b - a >= config.eps) {
    double c = b - fb * (b - a) / (fb - fa);
    if (!(c > a && c < b)) c = 0.5 * (a + b);
    std::optional<ShootingOutcome> trial;
    try {
      ++shots;
      trial = shoot(grid, v, c, config);
    } catch (const Error&) {
    }
    if (!trial || trial->diverged) {
      c = 0.5 * (a + b);
      try {
        ++shots;
        trial = shoot(grid, v, c, config);
      } catch (const Error&) {
        return std::nullopt;
      }
      if (trial->diverged) return std::nullopt;
    }
    const double fc = trial->mismatch;
    last = std::move(trial);
    if (fc == 0.0) break;
    if ((fc < 0.0) == (fa < 0.0)) {
      a = c;
      fa = fc;
      if (side == -1) fb *= 0.5;
      side = -1;
    } else {
      b = c;
      fb = fc;
      if (side == 1) fa *= 0.5;
      side = 1;
    }
  }
  if (!last) return std::nullopt;
  const bool converged = b - a < config.eps || last->mismatch == 0.0;
  auto pair = finish(std::move(*last), shots, b - a, converged);
  if (!pair.converged || !is_root(pair)) return std::nullopt;
  return pair;
}

SpectrumResult scan_auto(const Grid& grid, const PotentialModel& v, const SolverConfig& config) {
  SpectrumResult result;
  result.requested = config.nmax;
  const auto samples = scan_mismatch(grid, v, config);

  std::vector<Eigenpair> found;
  for (std::size_t i = 0; i + 1 < samples.size(); ++i) {
    if (static_cast<int>(found.size()) >= config.nmax) break;
    const auto& lo = samples[i];
    const auto& hi = samples[i + 1];
    if (!lo.usable() || !hi.usable()) continue;
    if (lo.mismatch == 0.0) {
      double energy = lo.energy;
      int shots = 0;
      found.push_back(finish(shoot_with_retry(grid, v, energy, config, shots), shots, 0.0, true));
      continue;
    }
    if ((lo.mismatch < 0.0) == (hi.mismatch < 0.0) || hi.mismatch == 0.0) continue;
    if (auto pair = refine_bracket(lo, hi, grid, v, config)) {
      if (found.empty() || pair->energy - found.back().energy >= config.eps) {
        found.push_back(std::move(*pair));
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Eigenpair& x, const Eigenpair& y) { return x.energy < y.energy; });
  for (auto& pair : found) {
    if (!result.states.empty() && pair.energy - result.states.back().energy < config.eps) continue;
    if (static_cast<int>(result.states.size()) == config.nmax) break;
    result.states.push_back(std::move(pair));
  }
  return result;
}

SpectrumResult scan_paper_steps(const Grid& grid, const PotentialModel& v,
                                const SolverConfig& config) {
  if (config.paper_schedule.empty()) {
    throw Error(ErrorCode::usage, "paper_steps mode needs a fixed-step schedule for this potential");
  }
  SpectrumResult result;
  result.requested = config.nmax;
  const double step = config.paper_schedule.step_multiplier * config.dE;

  double energy_old = config.e_in;
  double energy = config.e_in + config.dE;
  for (int state = 0; state < config.nmax; ++state) {
    double f_old = 0.0;
    std::optional<Eigenpair> accepted;
    std::optional<ShootingOutcome> last;
    double last_step = std::numeric_limits<double>::infinity();
    int shots = 0;
    for (int k = 0; k < config.kmax; ++k) {
      std::optional<ShootingOutcome> outcome;
      try {
        ++shots;
        outcome = shoot(grid, v, energy, config);
      } catch (const Error&) {
      }
      if (!outcome || outcome->diverged) {
        // The listing re-enters the loop with E unchanged here; stepping on
        // avoids spinning on the same trial.
        energy += step;
        continue;
      }
      const double f = outcome->mismatch;
      double correction = std::numeric_limits<double>::infinity();
      if (f != f_old) correction = -f * (energy - energy_old) / (f - f_old);
      if (std::abs(correction) < config.eps) {
        accepted = finish(std::move(*outcome), shots, std::abs(correction), true);
        break;
      }
      last_step = std::abs(correction);
      last = std::move(outcome);
      f_old = f;
      energy_old = energy;
      energy += step;
    }
    if (accepted) {
      result.states.push_back(std::move(*accepted));
    } else if (last) {
      result.states.push_back(finish(std::move(*last), shots, last_step, false));
      result.warnings.push_back("state " + std::to_string(state + 1) +
                                ": schedule exhausted kmax; reporting the last trial energy");
    } else {
      result.warnings.push_back("state " + std::to_string(state + 1) + ": no usable trial energy");
    }

    const auto& jumps = config.paper_schedule.jumps;
    const auto& jump = jumps[std::min<std::size_t>(static_cast<std::size_t>(state), jumps.size() - 1)];
    energy = (jump.from_previous_trial ? energy_old : energy) + jump.multiplier * config.dE;
  }
  return result;
}

}  // namespace

double secant_update(double energy, double energy_old, double f, double f_old) {
  if (f == f_old) {
    throw Error(ErrorCode::stalled_secant, "secant denominator vanishes (f == f_old)", f);
  }
  return -f * (energy - energy_old) / (f - f_old);
}

int count_nodes(std::span<const double> psi) {
  if (psi.size() < 3) throw Error(ErrorCode::domain, "count_nodes needs at least 3 samples");
  int nodes = 0;
  int previous_sign = 0;
  bool any = false;
  for (double value : psi) {
    if (value == 0.0) continue;
    any = true;
    const int sign = value > 0.0 ? 1 : -1;
    if (previous_sign != 0 && sign != previous_sign) ++nodes;
    previous_sign = sign;
  }
  if (!any) throw Error(ErrorCode::degenerate_function, "count_nodes of an all-zero function");
  return nodes;
}

Eigenpair refine_eigenvalue(double energy_seed, const Grid& grid, const PotentialModel& v,
                            const SolverConfig& config) {
  config.validate();
  return refine_from(energy_seed, energy_seed + config.dE, grid, v, config);
}

std::vector<ScanSample> scan_mismatch(const Grid& grid, const PotentialModel& v,
                                      const SolverConfig& config) {
  config.validate();
  std::vector<ScanSample> samples;
  for (std::size_t i = 0;; ++i) {
    const double energy = config.e_in + static_cast<double>(i) * config.dE;
    if (energy >= config.v_max) break;
    samples.push_back(ScanSample{energy, std::numeric_limits<double>::quiet_NaN(), 0, ""});
  }

  auto evaluate = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < samples.size(); i += stride) {
      auto& s = samples[i];
      try {
        const auto outcome = shoot(grid, v, s.energy, config);
        s.match_index = outcome.match_index;
        s.mismatch = outcome.mismatch;
        s.status = outcome.diverged ? "diverged" : "ok";
      } catch (const Error& e) {
        s.status = std::string(e.reason());
      }
    }
  };

  unsigned workers = config.threads == 0 ? std::thread::hardware_concurrency() : config.threads;
  workers = std::clamp<unsigned>(workers, 1u, 64u);
  if (workers == 1 || samples.size() < 2 * workers) {
    evaluate(0, 1);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(evaluate, w, workers);
  }
  return samples;
}

SpectrumResult scan_spectrum(const Grid& grid, const PotentialModel& v,
                             const SolverConfig& config) {
  config.validate();
  auto result = config.scan_mode == ScanMode::paper_steps ? scan_paper_steps(grid, v, config)
                                                          : scan_auto(grid, v, config);
  if (result.shortfall()) {
    result.warnings.push_back("shortfall: found " + std::to_string(result.states.size()) + " of " +
                              std::to_string(result.requested) + " requested states below v_max");
  }
  return result;
}

}  // namespace numerov
