#include "adaregret/scenario.hpp"

namespace adaregret {

void validate(const Scenario& s) {
  if (s.horizon < 1) throw std::invalid_argument("scenario: horizon must be >= 1");
  if (s.dimension < 1) throw std::invalid_argument("scenario: dimension must be >= 1");
  if (s.dimension != s.domain.dimension()) {
    throw std::invalid_argument("scenario: dimension does not match domain");
  }
  if (s.stage_starts.empty()) throw std::invalid_argument("scenario: empty stage list");
  if (s.stage_starts.front() != 1) throw std::invalid_argument("scenario: first stage must start at 1");
  for (std::size_t i = 1; i < s.stage_starts.size(); ++i) {
    if (s.stage_starts[i] <= s.stage_starts[i - 1]) {
      throw std::invalid_argument("scenario: stage starts must be increasing");
    }
  }
  if (s.stage_starts.back() > s.horizon) {
    throw std::invalid_argument("scenario: stage start beyond horizon");
  }
  if (s.stage_targets.size() != s.stage_starts.size()) {
    throw std::invalid_argument("scenario: one target per stage required");
  }
  for (const Vec& t : s.stage_targets) {
    if (static_cast<int>(t.size()) != s.dimension) {
      throw std::invalid_argument("scenario: target dimension mismatch");
    }
    if (!s.domain.contains(t)) throw std::invalid_argument("scenario: target outside domain");
  }
  if (s.jitter < 0.0) throw std::invalid_argument("scenario: jitter must be nonnegative");
}

std::vector<Vec> scenario_targets(const Scenario& s) {
  validate(s);
  std::mt19937_64 rng(s.seed);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Vec> targets;
  targets.reserve(s.horizon);
  std::size_t stage = 0;
  for (long t = 1; t <= s.horizon; ++t) {
    while (stage + 1 < s.stage_starts.size() && s.stage_starts[stage + 1] <= t) ++stage;
    Vec theta = s.stage_targets[stage];
    for (int i = 0; i < s.dimension; ++i) theta[i] += s.jitter * u(rng);
    targets.push_back(s.domain.project(theta));
  }
  return targets;
}

std::vector<LossFunction> generate_scenario(const Scenario& s) {
  std::vector<Vec> targets = scenario_targets(s);
  std::vector<LossFunction> losses;
  losses.reserve(targets.size());
  const double D = s.domain.diameter();
  for (Vec& theta : targets) losses.push_back(shifted_quadratic(std::move(theta), D));
  return losses;
}

}  // namespace adaregret
