#pragma once

#include <cstdint>
#include <vector>

#include "adaregret/domain.hpp"
#include "adaregret/loss.hpp"

namespace adaregret {

/// Synthetic piecewise-stationary stream of shifted-quadratic losses.
/// Stage i covers rounds [stage_starts[i], stage_starts[i+1]-1]; round t's
/// target is the stage target plus uniform jitter, projected back into the
/// domain. Fully determined by the seed.
struct Scenario {
  long horizon = 0;
  int dimension = 0;
  Domain domain = Domain::ball({0.0}, 1.0);
  std::vector<long> stage_starts;  // increasing, first element 1
  std::vector<Vec> stage_targets;  // one per stage, inside the domain
  double jitter = 0.0;
  std::uint64_t seed = 0;
};

void validate(const Scenario& s);

/// Per-round loss targets (deterministic given the seed).
std::vector<Vec> scenario_targets(const Scenario& s);

std::vector<LossFunction> generate_scenario(const Scenario& s);

}  // namespace adaregret
