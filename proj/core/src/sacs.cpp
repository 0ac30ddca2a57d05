#include "adaregret/sacs.hpp"

#include <cmath>

namespace adaregret {

Sacs::Sacs(Domain domain, double delta) : domain_(std::move(domain)), delta_(delta) {
  if (delta <= 0.0) throw std::invalid_argument("sacs: delta must be positive");
}

RoundResult Sacs::round(const LossFunction& f) {
  ++t_;
  experts_.push_back(Expert{t_, cgc_interval_at(t_).end, ExpertStats{}, Sogd(domain_, delta_)});

  std::vector<ExpertStats> stats;
  stats.reserve(experts_.size());
  for (const Expert& e : experts_) stats.push_back(e.stats);
  std::vector<double> p = normalized_weights(stats);

  RoundResult result;
  result.active_experts = static_cast<int>(experts_.size());
  result.prediction = Vec(domain_.dimension(), 0.0);
  for (std::size_t i = 0; i < experts_.size(); ++i) {
    axpy(result.prediction, p[i], experts_[i].sogd.decision());
  }
  result.loss = f.value(result.prediction);
  result.expert_losses.reserve(experts_.size());
  for (const Expert& e : experts_) {
    result.expert_losses.push_back({e.start, f.value(e.sogd.decision())});
  }

  // expired experts leave before the statistics update and never see f_t
  std::erase_if(experts_, [this](const Expert& e) { return e.end == t_; });

  for (Expert& e : experts_) {
    e.stats.update(result.loss - f.value(e.sogd.decision()));
    e.sogd.step(f);
  }
  return result;
}

double interval_bound_offset(long t, double H, double D, double delta) {
  return 1.5 * meta_log_factor(t) + 18.0 * H * D * D + 2.0 * D * std::sqrt(2.0 * delta);
}

double interval_bound_slope(long t, double H, double D) {
  return 8.0 * meta_log_factor(t) + 16.0 * H * D * D;
}

double sacs_regret_bound(long r, long s, double comparator_loss, double H, double D,
                         double delta) {
  if (comparator_loss < 0.0) throw std::invalid_argument("sacs_regret_bound: loss must be >= 0");
  const double v = static_cast<double>(cgc_cover(r, s).v());
  const double a = interval_bound_offset(s, H, D, delta);
  const double b = interval_bound_slope(s, H, D);
  return v * a + std::sqrt(v * b * comparator_loss);
}

}  // namespace adaregret
