#include "adaregret/domain.hpp"

#include <algorithm>

namespace adaregret {

Domain Domain::ball(Vec center, double radius) {
  if (center.empty()) throw std::invalid_argument("ball: empty center");
  if (radius <= 0.0) throw std::invalid_argument("ball: radius must be positive");
  Domain d;
  d.kind_ = DomainKind::Ball;
  d.center_ = std::move(center);
  d.radius_ = radius;
  d.diameter_ = 2.0 * radius;
  return d;
}

Domain Domain::box(Vec center, Vec halfwidths) {
  if (center.empty()) throw std::invalid_argument("box: empty center");
  require_same_dim(center, halfwidths);
  for (double h : halfwidths) {
    if (h <= 0.0) throw std::invalid_argument("box: halfwidths must be positive");
  }
  Domain d;
  d.kind_ = DomainKind::Box;
  d.center_ = std::move(center);
  d.halfwidths_ = std::move(halfwidths);
  d.diameter_ = 2.0 * norm(d.halfwidths_);
  return d;
}

Vec Domain::project(const Vec& p) const {
  require_same_dim(p, center_);
  if (kind_ == DomainKind::Ball) {
    Vec diff = sub(p, center_);
    double n = norm(diff);
    if (n <= radius_) return p;
    Vec r = center_;
    axpy(r, radius_ / n, diff);
    return r;
  }
  Vec r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    double lo = center_[i] - halfwidths_[i];
    double hi = center_[i] + halfwidths_[i];
    r[i] = std::clamp(p[i], lo, hi);
  }
  return r;
}

bool Domain::contains(const Vec& p, double tol) const {
  require_same_dim(p, center_);
  if (kind_ == DomainKind::Ball) {
    return dist(p, center_) <= radius_ + tol;
  }
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (std::abs(p[i] - center_[i]) > halfwidths_[i] + tol) return false;
  }
  return true;
}

Vec Domain::sample(std::mt19937_64& rng) const {
  const int d = dimension();
  if (kind_ == DomainKind::Box) {
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Vec p = center_;
    for (int i = 0; i < d; ++i) p[i] += halfwidths_[i] * u(rng);
    return p;
  }
  std::normal_distribution<double> g(0.0, 1.0);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Vec dir(d);
  double n = 0.0;
  do {
    for (int i = 0; i < d; ++i) dir[i] = g(rng);
    n = norm(dir);
  } while (n == 0.0);
  double r = radius_ * std::pow(u(rng), 1.0 / d);
  Vec p = center_;
  axpy(p, r / n, dir);
  return p;
}

}  // namespace adaregret
