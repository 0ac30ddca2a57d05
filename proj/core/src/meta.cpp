#include "adaregret/meta.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace adaregret {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double truncated_exponent(double R, double C) {
  const double rp = std::max(R, 0.0);
  return rp > 0.0 ? rp * rp / (3.0 * C) : 0.0;
}
}  // namespace

void ExpertStats::update(double instantaneous_regret) {
  regret += instantaneous_regret;
  abs_regret += std::abs(instantaneous_regret);
}

double potential(double R, double C) {
  if (C < 0.0) throw std::invalid_argument("potential: C must be >= 0");
  if (R <= 0.0) return 1.0;
  if (C == 0.0) throw std::invalid_argument("potential: R > 0 with C = 0");
  return std::exp(truncated_exponent(R, C));
}

double weight(double R, double C) {
  if (C < 0.0) throw std::invalid_argument("weight: C must be >= 0");
  const double x = truncated_exponent(R + 1.0, C + 1.0);
  const double y = truncated_exponent(R - 1.0, C + 1.0);
  // x >= y, so factor exp(x) for stability
  return 0.5 * std::exp(x) * (1.0 - std::exp(y - x));
}

double log_weight(double R, double C) {
  if (C < 0.0) throw std::invalid_argument("log_weight: C must be >= 0");
  if (R <= -1.0) return kNegInf;
  const double x = truncated_exponent(R + 1.0, C + 1.0);
  const double y = truncated_exponent(R - 1.0, C + 1.0);
  return x + std::log1p(-std::exp(y - x)) - std::log(2.0);
}

std::vector<double> normalized_weights(std::span<const ExpertStats> experts) {
  if (experts.empty()) throw std::invalid_argument("normalized_weights: empty active set");
  std::vector<double> lw(experts.size());
  double max_lw = kNegInf;
  for (std::size_t i = 0; i < experts.size(); ++i) {
    lw[i] = log_weight(experts[i].regret, experts[i].abs_regret);
    max_lw = std::max(max_lw, lw[i]);
  }
  std::vector<double> p(experts.size());
  if (max_lw == kNegInf) {  // every expert at R <= -1: undefined, use uniform
    const double u = 1.0 / static_cast<double>(experts.size());
    for (double& v : p) v = u;
    return p;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < experts.size(); ++i) {
    p[i] = std::exp(lw[i] - max_lw);
    sum += p[i];
  }
  for (double& v : p) v /= sum;
  return p;
}

double meta_log_factor(long t) {
  if (t < 1) throw std::invalid_argument("meta_log_factor: t must be >= 1");
  return 3.0 * std::log(4.0 * static_cast<double>(t) * static_cast<double>(t));
}

double meta_regret_bound(long t, double expert_loss) {
  if (expert_loss < 0.0) throw std::invalid_argument("meta_regret_bound: loss must be >= 0");
  const double c = meta_log_factor(t);
  return c + std::sqrt(2.0 * c * expert_loss);
}

}  // namespace adaregret
