#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "adaregret/intervals.hpp"
#include "adaregret/sacs_cpgc.hpp"

using namespace adaregret;

namespace {

const Domain kSegment = Domain::ball({0.0}, 1.0);  // D = 2, H = 1/4

LossFunction quad(double theta) { return shifted_quadratic({theta}, 2.0); }

}  // namespace

TEST_CASE("threshold floor and construction") {
  const double floor = cpgc_threshold_floor(0.25, 2.0, 1.0);
  CHECK(floor == doctest::Approx(25.65685424949238));

  SacsCpgc by_default(kSegment, 1.0, 0.25);
  CHECK(by_default.threshold() == doctest::Approx(floor));

  SacsCpgc above(kSegment, 1.0, 0.25, floor + 5.0);
  CHECK(above.threshold() == doctest::Approx(floor + 5.0));

  // below-floor override is rejected and the message carries the floor
  try {
    SacsCpgc bad(kSegment, 1.0, 0.25, 10.0);
    FAIL("expected a rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("25.65") != std::string::npos);
  }

  CHECK_THROWS_AS(SacsCpgc(kSegment, 0.0, 0.25), std::invalid_argument);

  // when the floor drops below 1 the default is clamped to 1
  Domain tiny = Domain::ball({0.0}, 0.05);
  SacsCpgc clamped(tiny, 1.0, 0.001);
  CHECK(clamped.threshold() == doctest::Approx(1.0));
}

TEST_CASE("markers appear only when the latest expert saturates") {
  SacsCpgc learner(kSegment, 1.0, 0.25);
  const double C = learner.threshold();
  double latest = 0.0;
  long last_marker = 0;
  for (long t = 1; t <= 1500; ++t) {
    double theta = (t % 2 == 0) ? 0.9 : -0.9;  // alternating, no fixed point is good
    RoundResult res = learner.round(quad(theta));
    if (res.marker) {
      // a restart happens only after the previous segment overflowed
      if (t > 1) CHECK(latest > C);
      latest = 0.0;
      last_marker = t;
      CHECK(learner.marker_rounds().back() == t);
    }
    // the latest expert is the last entry of the per-round loss samples
    latest += res.expert_losses.back().loss;
    CHECK(res.expert_losses.back().start == last_marker);
  }
  CHECK(learner.marker_count() >= 2);
  CHECK(learner.marker_count() == static_cast<long>(learner.marker_rounds().size()));
  CHECK(learner.marker_rounds().front() == 1);
}

TEST_CASE("active set follows the dyadic rule over marker indices") {
  SacsCpgc learner(kSegment, 1.0, 0.25);
  std::mt19937_64 rng(47);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (long t = 1; t <= 4000; ++t) {
    RoundResult res = learner.round(quad(u(rng)));
    if (res.marker) {
      long m = learner.marker_count();
      long expected = 0;
      for (long j = 1; j <= m; ++j) {
        if (cgc_end_index(j) > m) ++expected;
      }
      CHECK(res.active_experts == expected);
    }
    CHECK(kSegment.contains(res.prediction, 1e-9));
  }
  CHECK(learner.marker_count() >= 4);
}

TEST_CASE("marker count respects the loss budget") {
  SacsCpgc learner(kSegment, 1.0, 0.25);
  const double C = learner.threshold();
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> thetas;
  for (long t = 1; t <= 3000; ++t) {
    double theta = u(rng);
    thetas.push_back(theta);
    learner.round(quad(theta));

    // prefix comparator: projected mean of the targets so far
    double mean = 0.0;
    for (double x : thetas) mean += x;
    mean /= double(t);
    double w = std::clamp(mean, -1.0, 1.0);
    double prefix = 0.0;
    for (double x : thetas) prefix += (w - x) * (w - x) / 8.0;
    CHECK(learner.marker_count() <= marker_count_limit(C, prefix));
  }
}

TEST_CASE("completed segments carry real comparator loss") {
  SacsCpgc learner(kSegment, 1.0, 0.25);
  const double C = learner.threshold();
  std::vector<double> thetas;
  for (long t = 1; t <= 2000; ++t) {
    double theta = (t % 2 == 0) ? 0.9 : -0.9;
    thetas.push_back(theta);
    learner.round(quad(theta));
  }
  const auto& markers = learner.marker_rounds();
  REQUIRE(markers.size() >= 3);
  for (std::size_t i = 0; i + 1 < markers.size(); ++i) {
    long r = markers[i], s = markers[i + 1] - 1;
    double mean = 0.0;
    for (long t = r; t <= s; ++t) mean += thetas[t - 1];
    mean /= double(s - r + 1);
    double w = std::clamp(mean, -1.0, 1.0);
    double comp = 0.0;
    for (long t = r; t <= s; ++t) comp += (w - thetas[t - 1]) * (w - thetas[t - 1]) / 8.0;
    CHECK(comp >= C / 4.0 - 1e-9);
  }
}

TEST_CASE("loss-adaptive bound pieces") {
  const double C = cpgc_threshold_floor(0.25, 2.0, 1.0);
  CHECK(loss_adaptive_log_factor(100, 10.0, C) == doctest::Approx(9.548252623719819));
  CHECK(marker_count_limit(C, 40.0) == 7);
  CHECK_THROWS_AS(loss_adaptive_log_factor(0, 1.0, C), std::invalid_argument);
  CHECK_THROWS_AS(marker_count_limit(0.0, 1.0), std::invalid_argument);

  const double c = loss_adaptive_log_factor(100, 10.0, C);
  CHECK(cpgc_bound_offset(c, 0.25, 2.0, 1.0) ==
        doctest::Approx(1.5 * c + 18.0 + 4.0 * std::sqrt(2.0)));
  CHECK(cpgc_bound_slope(c, 0.25, 2.0) == doctest::Approx(8.0 * c + 16.0));

  // the constructive cover length can only tighten the bound
  double loose = cpgc_regret_bound(10, 200, 15.0, 30.0, 0.25, 2.0, 1.0, C);
  double tight = cpgc_regret_bound(10, 200, 15.0, 30.0, 0.25, 2.0, 1.0, C, 1);
  CHECK(tight <= loose);
  CHECK_THROWS_AS(cpgc_regret_bound(10, 200, 15.0, 5.0, 0.25, 2.0, 1.0, C),
                  std::invalid_argument);
}

TEST_CASE("interval regret stays under the loss-adaptive ceiling") {
  SacsCpgc learner(kSegment, 1.0, 0.25);
  const double C = learner.threshold();
  std::mt19937_64 rng(59);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const long T = 1024;
  std::vector<double> thetas;
  std::vector<double> losses;
  for (long t = 1; t <= T; ++t) {
    double theta = u(rng);
    thetas.push_back(theta);
    losses.push_back(learner.round(quad(theta)).loss);
  }

  auto comparator_loss = [&](long r, long s) {
    double mean = 0.0;
    for (long t = r; t <= s; ++t) mean += thetas[t - 1];
    mean /= double(s - r + 1);
    double w = std::clamp(mean, -1.0, 1.0);
    double total = 0.0;
    for (long t = r; t <= s; ++t) total += (w - thetas[t - 1]) * (w - thetas[t - 1]) / 8.0;
    return total;
  };

  std::mt19937_64 pick(61);
  std::uniform_int_distribution<long> ut(1, T);
  for (int i = 0; i < 150; ++i) {
    long r = ut(pick), s = ut(pick);
    if (r > s) std::swap(r, s);
    double comp = comparator_loss(r, s);
    double prefix = comparator_loss(1, s);
    double regret = 0.0;
    for (long t = r; t <= s; ++t) regret += losses[t - 1];
    regret -= comp;
    CHECK(regret <= cpgc_regret_bound(r, s, comp, std::max(prefix, comp), 0.25, 2.0, 1.0, C) + 1e-9);
  }
}
