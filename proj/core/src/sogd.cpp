#include "adaregret/sogd.hpp"

#include <cmath>

namespace adaregret {

Sogd::Sogd(Domain domain, double delta, std::optional<Vec> start)
    : domain_(std::move(domain)), delta_(delta) {
  if (delta <= 0.0) throw std::invalid_argument("sogd: delta must be positive");
  alpha_ = domain_.diameter() / std::sqrt(2.0);
  if (start) {
    if (!domain_.contains(*start, 1e-9)) {
      throw std::invalid_argument("sogd: start point outside the domain");
    }
    w_ = *start;
  } else {
    w_ = domain_.center();
  }
}

double Sogd::eta() const { return alpha_ / std::sqrt(delta_ + grad_sq_sum_); }

double Sogd::step(const LossFunction& f) {
  auto [value, grad] = loss_eval(f, w_);
  grad_sq_sum_ += norm_sq(grad);
  const double eta_t = eta();  // gradient sum runs through the current round
  axpy(w_, -eta_t, grad);
  w_ = domain_.project(w_);
  ++rounds_;
  loss_sum_ += value;
  return value;
}

double sogd_regret_bound(double H, double D, double delta, double comparator_loss) {
  if (H < 0 || D < 0 || comparator_loss < 0 || delta <= 0) {
    throw std::invalid_argument("sogd_regret_bound: invalid arguments");
  }
  return 8.0 * H * D * D + D * std::sqrt(2.0 * delta + 8.0 * H * comparator_loss);
}

double ogd_constant_step_size(double H, double B, double L) {
  const double hb2 = H * B * B;
  return 1.0 / (hb2 + std::sqrt(hb2 * hb2 + hb2 * L));
}

double ogd_regret_bound(double H, double B, double L) {
  const double hb2 = H * B * B;
  return 4.0 * hb2 + 2.0 * std::sqrt(hb2 * L);
}

OgdTrace ogd_constant_step(const Domain& domain, double H, double B, double L,
                           const std::vector<LossFunction>& losses) {
  if (B < 0 || L < 0) throw std::invalid_argument("ogd_constant_step: B and L must be >= 0");
  Vec origin(domain.dimension(), 0.0);
  if (!domain.contains(origin)) {
    throw std::invalid_argument("ogd_constant_step: domain must contain the origin");
  }
  OgdTrace trace;
  trace.eta = ogd_constant_step_size(H, B, L);
  trace.bound = ogd_regret_bound(H, B, L);
  Vec w = origin;
  for (const LossFunction& f : losses) {
    auto [value, grad] = loss_eval(f, w);
    trace.iterates.push_back(w);
    trace.losses.push_back(value);
    axpy(w, -trace.eta, grad);
    w = domain.project(w);
  }
  return trace;
}

}  // namespace adaregret
