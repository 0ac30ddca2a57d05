#pragma once

#include <span>
#include <vector>

namespace adaregret {

/// Running regret statistics of one sleeping expert: R is the signed
/// cumulative (learner - expert) loss gap, C the cumulative absolute gap.
struct ExpertStats {
  double regret = 0.0;    // R
  double abs_regret = 0.0;  // C, always >= |R|
  void update(double instantaneous_regret);
};

/// exp([R]_+^2 / (3C)), with the (0,0) corner defined as 1.
double potential(double R, double C);

/// (Phi(R+1, C+1) - Phi(R-1, C+1)) / 2, evaluated directly.
/// Exactly 0 when R <= -1.
double weight(double R, double C);

/// log of weight(R, C); -infinity when the weight is 0. Stable for exponents
/// far beyond the overflow point of the direct form.
double log_weight(double R, double C);

/// Probabilities proportional to the weights, computed in the log domain by
/// factoring out the maximum. Falls back to uniform when every weight is 0.
std::vector<double> normalized_weights(std::span<const ExpertStats> experts);

/// c(t) = 3 ln(4 t^2), the per-expert log factor of the aggregation regret.
double meta_log_factor(long t);

/// c(t) + sqrt(2 c(t) L): ceiling on the learner-vs-expert loss gap through
/// round t for an expert with cumulative loss L.
double meta_regret_bound(long t, double expert_loss);

}  // namespace adaregret
