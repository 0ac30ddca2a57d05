#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adaregret/domain.hpp"
#include "adaregret/vecmath.hpp"

namespace adaregret {

/// A convex, nonnegative, smooth loss with value and gradient.
/// `smoothness` is the Lipschitz constant of the gradient; `target` is set
/// for the shifted-quadratic family and enables closed-form comparators.
struct LossFunction {
  int dimension = 0;
  double smoothness = 0.0;
  std::function<double(const Vec&)> value;
  std::function<Vec(const Vec&)> gradient;
  std::optional<Vec> target;
};

/// f(w) = ||w - theta||^2 / (2 D^2); nonnegative everywhere, 1/D^2-smooth,
/// and bounded by 1/2 when theta and w both lie in a diameter-D set.
LossFunction shifted_quadratic(Vec theta, double diameter);

std::pair<double, Vec> loss_eval(const LossFunction& f, const Vec& w);

struct AssumptionCheck {
  std::string name;
  bool passed = false;
  double worst_margin = 0.0;  // smallest observed slack; negative means violated
};

struct AssumptionReport {
  std::vector<AssumptionCheck> checks;
  bool all_passed() const;
};

/// Sampling-based verification of the loss assumptions on a domain:
/// values in [0,1] inside, nonnegativity on a sampled neighborhood outside,
/// gradient Lipschitz-ness, the self-bounding inequality
/// ||grad f||^2 <= 4 H f, and the analytic gradient against central finite
/// differences. Violations are reported, never thrown.
AssumptionReport verify_loss_assumptions(const LossFunction& f, const Domain& domain,
                                         int samples, std::uint64_t seed);

}  // namespace adaregret
