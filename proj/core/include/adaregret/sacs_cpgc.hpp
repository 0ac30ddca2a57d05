#pragma once

#include <deque>
#include <optional>

#include "adaregret/domain.hpp"
#include "adaregret/intervals.hpp"
#include "adaregret/learner.hpp"
#include "adaregret/meta.hpp"
#include "adaregret/sogd.hpp"

namespace adaregret {

/// Lower bound 20 H D^2 + 2 D sqrt(2 delta) on the restart threshold.
double cpgc_threshold_floor(double H, double D, double delta);

/// The problem-dependent variant: experts start at markers rather than every
/// round. A marker is placed whenever the latest expert's cumulative loss
/// (strictly) exceeds the threshold; expert lifetimes follow the unique-start
/// dyadic rule applied to marker indices, tracked through end indices since
/// future marker rounds are unknown.
class SacsCpgc : public Learner {
 public:
  /// threshold defaults to max(floor, 1); an explicit value below the floor
  /// is rejected.
  SacsCpgc(Domain domain, double delta, double smoothness,
           std::optional<double> threshold = std::nullopt);

  RoundResult round(const LossFunction& f) override;

  double threshold() const { return threshold_; }
  long marker_count() const { return m_; }
  const std::vector<long>& marker_rounds() const { return marker_rounds_; }

 private:
  struct Expert {
    long marker_index;
    long start;
    long end_index;  // g: removed when the marker counter is about to reach it
    ExpertStats stats;
    Sogd sogd;
  };
  Domain domain_;
  double delta_;
  double threshold_;
  bool new_interval_ = true;
  long m_ = 0;          // markers so far
  long t_ = 0;
  long latest_start_ = 0;
  double latest_loss_ = 0.0;  // cumulative loss of the latest expert
  std::vector<long> marker_rounds_;
  std::deque<Expert> experts_;
};

/// Loss-adaptive counterpart of the aggregation log factor:
/// 3 ln(1 + 4 L_prefix / C) + 3 ln((5 + 3 ln(1 + t)) / 2).
double loss_adaptive_log_factor(long t, double prefix_comparator_loss, double threshold);

/// a~(t) = 3/2 c~ + 18 H D^2 + 2 D sqrt(2 delta)
double cpgc_bound_offset(double c_tilde, double H, double D, double delta);

/// b~(t) = 8 c~ + 16 H D^2
double cpgc_bound_slope(double c_tilde, double H, double D);

/// 2(C+1) + 3/2 c~(s) + v a~(s) + sqrt(v b~(s) L_rs). v is the ceiling
/// expression in the interval loss, or the constructive marker-cover length
/// when the run's marker sequence makes one available (whichever is smaller).
double cpgc_regret_bound(long r, long s, double interval_loss, double prefix_loss,
                         double H, double D, double delta, double threshold,
                         std::optional<long> constructive_v = std::nullopt);

/// floor(1 + 4 L / C): ceiling on the number of markers created while the
/// best prefix comparator has loss L.
long marker_count_limit(double threshold, double prefix_comparator_loss);

}  // namespace adaregret
