#pragma once

#include <deque>

#include "adaregret/domain.hpp"
#include "adaregret/intervals.hpp"
#include "adaregret/learner.hpp"
#include "adaregret/meta.hpp"
#include "adaregret/sogd.hpp"

namespace adaregret {

/// Strongly adaptive learner for convex and smooth losses: one scale-free
/// gradient-descent expert is created per round on the unique-start dyadic
/// schedule, the active experts are aggregated by the normal-potential
/// hedge, and each expert is dropped at the end of its interval.
///
/// Within one round: create, predict, combine, remove expired experts, then
/// update statistics and forward the loss to the survivors only.
class Sacs : public Learner {
 public:
  Sacs(Domain domain, double delta);

  RoundResult round(const LossFunction& f) override;

  long rounds_seen() const { return t_; }
  int active_count() const { return static_cast<int>(experts_.size()); }

 private:
  struct Expert {
    long start;
    long end;
    ExpertStats stats;
    Sogd sogd;
  };
  Domain domain_;
  double delta_;
  long t_ = 0;
  std::deque<Expert> experts_;  // ordered by start round
};

/// The length-independent offset a(t) = 9/2 ln(4 t^2) + 18 H D^2 + 2 D sqrt(2 delta).
double interval_bound_offset(long t, double H, double D, double delta);

/// The loss multiplier b(t) = 24 ln(4 t^2) + 16 H D^2.
double interval_bound_slope(long t, double H, double D);

/// v a(s) + sqrt(v b(s) L) with v the greedy cover length of [r, s];
/// regret ceiling over an arbitrary interval against a comparator of loss L.
double sacs_regret_bound(long r, long s, double comparator_loss, double H, double D,
                         double delta);

}  // namespace adaregret
