#pragma once

#include <vector>

#include "adaregret/loss.hpp"
#include "adaregret/vecmath.hpp"

namespace adaregret {

/// Loss of one active expert at its own prediction this round, keyed by the
/// expert's start round (unique under both scheduling rules).
struct ExpertLossSample {
  long start = 0;
  double loss = 0.0;
};

struct RoundResult {
  Vec prediction;
  double loss = 0.0;
  int active_experts = 0;
  bool marker = false;  // a new problem-dependent interval opened this round
  std::vector<ExpertLossSample> expert_losses;
};

class Learner {
 public:
  virtual ~Learner() = default;
  virtual RoundResult round(const LossFunction& f) = 0;
};

}  // namespace adaregret
