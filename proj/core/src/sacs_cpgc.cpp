#include "adaregret/sacs_cpgc.hpp"

#include <cmath>

namespace adaregret {

double cpgc_threshold_floor(double H, double D, double delta) {
  return 20.0 * H * D * D + 2.0 * D * std::sqrt(2.0 * delta);
}

SacsCpgc::SacsCpgc(Domain domain, double delta, double smoothness,
                   std::optional<double> threshold)
    : domain_(std::move(domain)), delta_(delta) {
  if (delta <= 0.0) throw std::invalid_argument("sacs_cpgc: delta must be positive");
  const double floor = cpgc_threshold_floor(smoothness, domain_.diameter(), delta);
  if (threshold) {
    if (*threshold < floor) {
      throw std::invalid_argument("sacs_cpgc: threshold below the required floor " +
                                  std::to_string(floor));
    }
    threshold_ = *threshold;
  } else {
    threshold_ = std::max(floor, 1.0);
  }
}

RoundResult SacsCpgc::round(const LossFunction& f) {
  ++t_;
  RoundResult result;
  if (new_interval_) {
    ++m_;
    experts_.push_back(
        Expert{m_, t_, cgc_end_index(m_), ExpertStats{}, Sogd(domain_, delta_)});
    new_interval_ = false;
    latest_start_ = t_;
    latest_loss_ = 0.0;
    marker_rounds_.push_back(t_);
    result.marker = true;
  }

  std::vector<ExpertStats> stats;
  stats.reserve(experts_.size());
  for (const Expert& e : experts_) stats.push_back(e.stats);
  std::vector<double> p = normalized_weights(stats);

  result.active_experts = static_cast<int>(experts_.size());
  result.prediction = Vec(domain_.dimension(), 0.0);
  std::vector<double> expert_loss(experts_.size());
  for (std::size_t i = 0; i < experts_.size(); ++i) {
    axpy(result.prediction, p[i], experts_[i].sogd.decision());
    expert_loss[i] = f.value(experts_[i].sogd.decision());
    result.expert_losses.push_back({experts_[i].start, expert_loss[i]});
  }
  result.loss = f.value(result.prediction);

  latest_loss_ += expert_loss.back();  // the latest expert is the newest entry
  if (latest_loss_ > threshold_) {     // strict: a tie at the threshold does not restart
    new_interval_ = true;
    std::erase_if(experts_, [this](const Expert& e) { return e.end_index == m_ + 1; });
  }

  for (Expert& e : experts_) {
    e.stats.update(result.loss - f.value(e.sogd.decision()));
    e.sogd.step(f);
  }
  return result;
}

double loss_adaptive_log_factor(long t, double prefix_comparator_loss, double threshold) {
  if (t < 1 || prefix_comparator_loss < 0.0 || threshold <= 0.0) {
    throw std::invalid_argument("loss_adaptive_log_factor: invalid arguments");
  }
  return 3.0 * std::log1p(4.0 * prefix_comparator_loss / threshold) +
         3.0 * std::log((5.0 + 3.0 * std::log1p(static_cast<double>(t))) / 2.0);
}

double cpgc_bound_offset(double c_tilde, double H, double D, double delta) {
  return 1.5 * c_tilde + 18.0 * H * D * D + 2.0 * D * std::sqrt(2.0 * delta);
}

double cpgc_bound_slope(double c_tilde, double H, double D) {
  return 8.0 * c_tilde + 16.0 * H * D * D;
}

double cpgc_regret_bound(long r, long s, double interval_loss, double prefix_loss,
                         double H, double D, double delta, double threshold,
                         std::optional<long> constructive_v) {
  if (r < 1 || r > s || interval_loss < 0.0 || prefix_loss < interval_loss) {
    throw std::invalid_argument("cpgc_regret_bound: invalid arguments");
  }
  const double c = loss_adaptive_log_factor(s, prefix_loss, threshold);
  const double a = cpgc_bound_offset(c, H, D, delta);
  const double b = cpgc_bound_slope(c, H, D);
  double v = std::ceil(std::log2(2.0 + 4.0 * interval_loss / threshold));
  if (constructive_v) v = std::min(v, static_cast<double>(*constructive_v));
  return 2.0 * (threshold + 1.0) + 1.5 * c + v * a + std::sqrt(v * b * interval_loss);
}

long marker_count_limit(double threshold, double prefix_comparator_loss) {
  if (threshold <= 0.0 || prefix_comparator_loss < 0.0) {
    throw std::invalid_argument("marker_count_limit: invalid arguments");
  }
  return static_cast<long>(std::floor(1.0 + 4.0 * prefix_comparator_loss / threshold));
}

}  // namespace adaregret
