#include "adaregret/loss.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace adaregret {

LossFunction shifted_quadratic(Vec theta, double diameter) {
  if (diameter <= 0.0) throw std::invalid_argument("shifted_quadratic: diameter must be positive");
  LossFunction f;
  f.dimension = static_cast<int>(theta.size());
  const double d2 = diameter * diameter;
  f.smoothness = 1.0 / d2;
  f.target = theta;
  f.value = [theta, d2](const Vec& w) {
    require_same_dim(w, theta);
    return norm_sq(sub(w, theta)) / (2.0 * d2);
  };
  f.gradient = [theta, d2](const Vec& w) {
    require_same_dim(w, theta);
    return scale(sub(w, theta), 1.0 / d2);
  };
  return f;
}

std::pair<double, Vec> loss_eval(const LossFunction& f, const Vec& w) {
  if (static_cast<int>(w.size()) != f.dimension) {
    throw std::invalid_argument("loss_eval: dimension mismatch");
  }
  return {f.value(w), f.gradient(w)};
}

bool AssumptionReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const AssumptionCheck& c) { return c.passed; });
}

namespace {

Vec central_fd_gradient(const LossFunction& f, const Vec& w) {
  const double h = 1e-5 * (1.0 + norm(w));
  Vec g(w.size());
  Vec wp = w, wm = w;
  for (std::size_t i = 0; i < w.size(); ++i) {
    wp[i] = w[i] + h;
    wm[i] = w[i] - h;
    g[i] = (f.value(wp) - f.value(wm)) / (2.0 * h);
    wp[i] = w[i];
    wm[i] = w[i];
  }
  return g;
}

}  // namespace

AssumptionReport verify_loss_assumptions(const LossFunction& f, const Domain& domain,
                                         int samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("verify_loss_assumptions: samples must be >= 1");
  std::mt19937_64 rng(seed);
  const double H = f.smoothness;
  constexpr double kInf = std::numeric_limits<double>::infinity();
  constexpr double kTol = 1e-9;

  double range_margin = kInf;
  double outside_margin = kInf;
  double smooth_margin = kInf;
  double self_margin = kInf;
  double fd_margin = kInf;

  Vec prev_w;
  Vec prev_g;
  for (int k = 0; k < samples; ++k) {
    Vec w = domain.sample(rng);
    double v = f.value(w);
    Vec g = f.gradient(w);

    range_margin = std::min(range_margin, std::min(v, 1.0 - v));
    self_margin = std::min(self_margin, 4.0 * H * v - norm_sq(g));

    if (!prev_w.empty()) {
      double dw = dist(w, prev_w);
      double dg = dist(g, prev_g);
      smooth_margin = std::min(smooth_margin, H * dw - dg);
    }
    prev_w = w;
    prev_g = g;

    // nonnegativity outside the domain, on an inflated copy
    Vec out = domain.center();
    axpy(out, 2.0, sub(w, domain.center()));
    outside_margin = std::min(outside_margin, f.value(out));

    Vec fd = central_fd_gradient(f, w);
    double rel = dist(g, fd) / (1.0 + norm(g));
    fd_margin = std::min(fd_margin, 1e-6 - rel);
  }

  AssumptionReport r;
  r.checks.push_back({"value-in-[0,1]-on-domain", range_margin >= -kTol, range_margin});
  r.checks.push_back({"nonnegative-outside-domain", outside_margin >= -kTol, outside_margin});
  r.checks.push_back({"gradient-H-lipschitz", smooth_margin >= -kTol, smooth_margin});
  r.checks.push_back({"self-bounding", self_margin >= -kTol, self_margin});
  r.checks.push_back({"gradient-matches-finite-differences", fd_margin >= 0.0, fd_margin});
  return r;
}

}  // namespace adaregret
