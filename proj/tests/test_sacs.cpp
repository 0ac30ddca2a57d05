#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "adaregret/intervals.hpp"
#include "adaregret/meta.hpp"
#include "adaregret/sacs.hpp"

using namespace adaregret;

namespace {

const Domain kBall = Domain::ball({0.0, 0.0}, 1.0);  // D = 2, H = 1/4

LossFunction quad(Vec theta) { return shifted_quadratic(std::move(theta), 2.0); }

// experts alive while round t is being played: started at s <= t, not yet past
// the end of their dyadic interval
long reference_active_count(long t) {
  long n = 0;
  for (long s = 1; s <= t; ++s) {
    if (cgc_interval_at(s).end >= t) ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("active set follows the dyadic schedule") {
  Sacs learner(kBall, 1.0);
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-0.7, 0.7);
  for (long t = 1; t <= 512; ++t) {
    RoundResult res = learner.round(quad({u(rng), u(rng)}));
    CHECK(res.active_experts == reference_active_count(t));
    CHECK(res.active_experts <= static_cast<int>(std::floor(std::log2(double(t)))) + 1);
    CHECK_FALSE(res.marker);
    CHECK(kBall.contains(res.prediction, 1e-9));
    // one loss sample per active expert, keyed by unique start rounds
    REQUIRE(res.expert_losses.size() == static_cast<std::size_t>(res.active_experts));
    for (std::size_t i = 1; i < res.expert_losses.size(); ++i) {
      CHECK(res.expert_losses[i].start > res.expert_losses[i - 1].start);
    }
    CHECK(res.expert_losses.back().start == t);
  }
}

TEST_CASE("first round predicts from the single fresh expert") {
  Sacs learner(kBall, 1.0);
  RoundResult res = learner.round(quad({0.5, 0.5}));
  CHECK(res.active_experts == 1);
  CHECK(res.prediction == Vec{0.0, 0.0});
  CHECK(res.loss == doctest::Approx(0.5 / 8.0));
}

TEST_CASE("delta guard") {
  CHECK_THROWS_AS(Sacs(kBall, 0.0), std::invalid_argument);
}

TEST_CASE("aggregation regret of every expert stays bounded") {
  Sacs learner(kBall, 1.0);
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  // independent bookkeeping: cumulative learner and expert losses per start
  std::map<long, double> expert_total;
  std::map<long, double> learner_since;
  for (long t = 1; t <= 400; ++t) {
    Vec theta = kBall.project({u(rng), u(rng)});
    RoundResult res = learner.round(quad(theta));
    for (const ExpertLossSample& e : res.expert_losses) {
      expert_total[e.start] += e.loss;
      learner_since[e.start] += res.loss;
      double meta_regret = learner_since[e.start] - expert_total[e.start];
      CHECK(meta_regret <= meta_regret_bound(t, expert_total[e.start]) + 1e-9);
    }
    // starts expire exactly at the dyadic interval end
    std::erase_if(expert_total, [t](const auto& kv) { return cgc_interval_at(kv.first).end == t; });
    std::erase_if(learner_since, [t](const auto& kv) { return cgc_interval_at(kv.first).end == t; });
  }
}

TEST_CASE("interval bound constants") {
  // H = 1/4, D = 2, delta = 1 at t = 23
  CHECK(interval_bound_offset(23, 0.25, 2.0, 1.0) == doctest::Approx(58.11462681789424));
  CHECK(interval_bound_slope(23, 0.25, 2.0) == doctest::Approx(199.77478703147656));
  CHECK(sacs_regret_bound(5, 23, 0.0, 0.25, 2.0, 1.0) ==
        doctest::Approx(4.0 * 58.11462681789424));
  CHECK_THROWS_AS(sacs_regret_bound(5, 23, -1.0, 0.25, 2.0, 1.0), std::invalid_argument);
}

TEST_CASE("interval regret stays under the closed-form ceiling") {
  const double H = 0.25, D = 2.0, delta = 1.0;
  Sacs learner(kBall, delta);
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(-0.9, 0.9);
  const long T = 600;
  std::vector<Vec> thetas;
  std::vector<double> losses;
  for (long t = 1; t <= T; ++t) {
    // abrupt shift halfway through
    Vec base = t <= T / 2 ? Vec{0.6, 0.3} : Vec{-0.6, -0.3};
    Vec theta = kBall.project({base[0] + 0.2 * u(rng), base[1] + 0.2 * u(rng)});
    thetas.push_back(theta);
    losses.push_back(learner.round(quad(theta)).loss);
  }

  auto comparator_loss = [&](long r, long s) {
    Vec mean{0.0, 0.0};
    for (long t = r; t <= s; ++t) axpy(mean, 1.0, thetas[t - 1]);
    mean = scale(mean, 1.0 / double(s - r + 1));
    Vec w = kBall.project(mean);
    double total = 0.0;
    for (long t = r; t <= s; ++t) total += norm_sq(sub(w, thetas[t - 1])) / 8.0;
    return total;
  };

  std::mt19937_64 pick(43);
  std::uniform_int_distribution<long> ut(1, T);
  for (int i = 0; i < 200; ++i) {
    long r = ut(pick), s = ut(pick);
    if (r > s) std::swap(r, s);
    double comp = comparator_loss(r, s);
    double regret = 0.0;
    for (long t = r; t <= s; ++t) regret += losses[t - 1];
    regret -= comp;
    CHECK(regret <= sacs_regret_bound(r, s, comp, H, D, delta) + 1e-9);
  }
}
