#pragma once

#include <optional>

#include "adaregret/domain.hpp"
#include "adaregret/loss.hpp"

namespace adaregret {

/// Projected online gradient descent with a scale-free step size
/// alpha / sqrt(delta + sum of squared gradient norms), alpha = D / sqrt(2).
/// The squared norm of the current gradient enters the sum before the step
/// size is computed.
class Sogd {
 public:
  Sogd(Domain domain, double delta, std::optional<Vec> start = std::nullopt);

  /// Prediction for the upcoming round.
  const Vec& decision() const { return w_; }

  /// Suffers the loss at the current decision, takes the projected gradient
  /// step, and returns the loss value.
  double step(const LossFunction& f);

  /// Step size with the current gradient sum (alpha / sqrt(delta) initially).
  double eta() const;

  double alpha() const { return alpha_; }
  double delta() const { return delta_; }
  double grad_norm_sq_sum() const { return grad_sq_sum_; }
  long rounds_seen() const { return rounds_; }
  double cumulative_loss() const { return loss_sum_; }
  const Domain& domain() const { return domain_; }

 private:
  Domain domain_;
  Vec w_;
  double delta_;
  double alpha_;
  double grad_sq_sum_ = 0.0;
  long rounds_ = 0;
  double loss_sum_ = 0.0;
};

/// 8 H D^2 + D sqrt(2 delta + 8 H L): anytime regret ceiling of the
/// scale-free algorithm against a comparator with cumulative loss L.
double sogd_regret_bound(double H, double D, double delta, double comparator_loss);

/// Fixed step size 1 / (H B^2 + sqrt(H^2 B^4 + H B^2 L)) for constant-step
/// gradient descent started at the origin.
double ogd_constant_step_size(double H, double B, double L);

/// 4 H B^2 + 2 sqrt(H B^2 L): regret ceiling of the constant-step baseline.
double ogd_regret_bound(double H, double B, double L);

struct OgdTrace {
  std::vector<Vec> iterates;    // w_1 .. w_T (pre-update decisions)
  std::vector<double> losses;   // per-round losses at the iterates
  double eta = 0.0;
  double bound = 0.0;
};

/// Constant-step baseline from w_1 = 0; the domain must contain the origin.
OgdTrace ogd_constant_step(const Domain& domain, double H, double B, double L,
                           const std::vector<LossFunction>& losses);

}  // namespace adaregret
