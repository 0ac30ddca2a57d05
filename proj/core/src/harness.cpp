#include "adaregret/harness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>

#include "adaregret/meta.hpp"
#include "adaregret/sacs.hpp"
#include "adaregret/sacs_cpgc.hpp"

namespace adaregret {

std::string to_string(LearnerKind k) {
  switch (k) {
    case LearnerKind::Sogd: return "sogd";
    case LearnerKind::OgdConstant: return "ogd-constant";
    case LearnerKind::Sacs: return "sacs";
    case LearnerKind::SacsCpgc: return "sacs-cpgc";
  }
  return "unknown";
}

std::optional<LearnerKind> learner_kind_from_string(const std::string& s) {
  if (s == "sogd") return LearnerKind::Sogd;
  if (s == "ogd-constant") return LearnerKind::OgdConstant;
  if (s == "sacs") return LearnerKind::Sacs;
  if (s == "sacs-cpgc") return LearnerKind::SacsCpgc;
  return std::nullopt;
}

namespace {

/// Adapts a bare Sogd instance to the Learner interface.
class SogdLearner : public Learner {
 public:
  SogdLearner(Domain domain, double delta) : sogd_(std::move(domain), delta) {}
  RoundResult round(const LossFunction& f) override {
    RoundResult r;
    r.prediction = sogd_.decision();
    r.active_experts = 1;
    r.loss = sogd_.step(f);
    return r;
  }

 private:
  Sogd sogd_;
};

}  // namespace

RunTrace run_scenario(Learner& learner, const Scenario& scenario, LearnerKind kind,
                      double delta, double threshold) {
  RunTrace trace;
  trace.scenario = scenario;
  trace.kind = kind;
  trace.delta = delta;
  trace.threshold = threshold;
  trace.targets = scenario_targets(scenario);

  std::map<long, std::size_t> stream_index;
  std::vector<LossFunction> losses = generate_scenario(scenario);
  for (long t = 1; t <= scenario.horizon; ++t) {
    RoundResult r = learner.round(losses[t - 1]);
    trace.losses.push_back(r.loss);
    trace.predictions.push_back(r.prediction);
    trace.active_experts.push_back(r.active_experts);
    trace.marker_flags.push_back(r.marker ? 1 : 0);
    if (r.marker) trace.marker_rounds.push_back(t);
    for (const ExpertLossSample& e : r.expert_losses) {
      auto [it, inserted] = stream_index.try_emplace(e.start, trace.experts.size());
      if (inserted) trace.experts.push_back({e.start, {}});
      trace.experts[it->second].losses.push_back(e.loss);
    }
  }
  return trace;
}

RunTrace run_scenario(const Scenario& scenario, LearnerKind kind, double delta,
                      std::optional<double> threshold) {
  validate(scenario);
  const Domain& domain = scenario.domain;
  const double D = domain.diameter();
  const double H = 1.0 / (D * D);
  switch (kind) {
    case LearnerKind::Sogd: {
      SogdLearner l(domain, delta);
      return run_scenario(l, scenario, kind, delta);
    }
    case LearnerKind::Sacs: {
      Sacs l(domain, delta);
      return run_scenario(l, scenario, kind, delta);
    }
    case LearnerKind::SacsCpgc: {
      SacsCpgc l(domain, delta, H, threshold);
      return run_scenario(l, scenario, kind, delta, l.threshold());
    }
    case LearnerKind::OgdConstant: {
      // hindsight comparator loss feeds the fixed step size
      std::vector<Vec> targets = scenario_targets(scenario);
      ComparatorOracle oracle(targets, domain);
      auto [w_star, l_star] = oracle.best(1, scenario.horizon);
      const double B = D / std::sqrt(2.0);
      OgdTrace ogd = ogd_constant_step(domain, H, B, l_star, generate_scenario(scenario));
      RunTrace trace;
      trace.scenario = scenario;
      trace.kind = kind;
      trace.delta = delta;
      trace.targets = std::move(targets);
      trace.losses = ogd.losses;
      trace.predictions = ogd.iterates;
      trace.active_experts.assign(ogd.losses.size(), 1);
      trace.marker_flags.assign(ogd.losses.size(), 0);
      return trace;
    }
  }
  throw std::invalid_argument("run_scenario: unknown learner kind");
}

ComparatorOracle::ComparatorOracle(const std::vector<Vec>& targets, const Domain& domain)
    : domain_(&domain) {
  const double D = domain.diameter();
  inv_two_d2_ = 1.0 / (2.0 * D * D);
  const int d = domain.dimension();
  prefix_target_sum_.assign(targets.size() + 1, Vec(d, 0.0));
  prefix_target_sq_.assign(targets.size() + 1, 0.0);
  for (std::size_t t = 0; t < targets.size(); ++t) {
    prefix_target_sum_[t + 1] = prefix_target_sum_[t];
    axpy(prefix_target_sum_[t + 1], 1.0, targets[t]);
    prefix_target_sq_[t + 1] = prefix_target_sq_[t] + norm_sq(targets[t]);
  }
}

double ComparatorOracle::loss_at(const Vec& w, long r, long s) const {
  const double n = static_cast<double>(s - r + 1);
  Vec sum = sub(prefix_target_sum_[s], prefix_target_sum_[r - 1]);
  const double sq = prefix_target_sq_[s] - prefix_target_sq_[r - 1];
  // Cancellation can leave a tiny negative residue when w is the exact mean.
  return std::max(0.0, (n * norm_sq(w) - 2.0 * dot(w, sum) + sq) * inv_two_d2_);
}

std::pair<Vec, double> ComparatorOracle::best(long r, long s) const {
  if (r < 1 || r > s || s > static_cast<long>(prefix_target_sq_.size()) - 1) {
    throw std::invalid_argument("ComparatorOracle::best: interval out of range");
  }
  Vec mean = sub(prefix_target_sum_[s], prefix_target_sum_[r - 1]);
  for (double& x : mean) x /= static_cast<double>(s - r + 1);
  Vec w = domain_->project(mean);
  return {w, loss_at(w, r, s)};
}

std::pair<Vec, double> best_comparator(const std::vector<LossFunction>& losses,
                                       const Domain& domain, double tol, long max_iters) {
  if (losses.empty()) throw std::invalid_argument("best_comparator: empty loss list");
  double total_smoothness = 0.0;
  for (const LossFunction& f : losses) total_smoothness += f.smoothness;
  const double eta = 1.0 / std::max(total_smoothness, 1e-12);
  Vec w = domain.center();
  for (long it = 0; it < max_iters; ++it) {
    Vec g(w.size(), 0.0);
    for (const LossFunction& f : losses) axpy(g, 1.0, f.gradient(w));
    Vec next = w;
    axpy(next, -eta, g);
    next = domain.project(next);
    const double mapping_norm = dist(w, next) / eta;
    w = std::move(next);
    if (mapping_norm <= tol) {
      double total = 0.0;
      for (const LossFunction& f : losses) total += f.value(w);
      return {w, total};
    }
  }
  throw std::runtime_error("best_comparator: projected gradient descent did not converge");
}

double interval_regret(const RunTrace& trace, long r, long s, double comparator_loss) {
  if (r < 1 || r > s || s > trace.horizon()) {
    throw std::invalid_argument("interval_regret: interval out of range");
  }
  double sum = 0.0;
  for (long t = r; t <= s; ++t) sum += trace.losses[t - 1];
  return sum - comparator_loss;
}

namespace {

std::vector<Interval> build_family(const RunTrace& trace, const IntervalFamilySpec& spec) {
  const long T = trace.horizon();
  std::set<std::pair<long, long>> seen;
  std::vector<Interval> family;
  auto push = [&](long r, long s) {
    if (r < 1 || s > T || r > s) return;
    if (seen.insert({r, s}).second) family.push_back({r, s});
  };

  if (spec.kind == IntervalFamilySpec::Kind::Exhaustive) {
    if (T > 256) throw std::invalid_argument("audit_run: exhaustive family requires T <= 256");
    for (long r = 1; r <= T; ++r)
      for (long s = r; s <= T; ++s) push(r, s);
  } else {
    for (long k = 0; (1L << k) <= T; ++k) {
      const long len = 1L << k;
      for (long i = 1; i * len <= T; ++i) push(i * len, (i + 1) * len - 1);
    }
    if (spec.kind == IntervalFamilySpec::Kind::Sampled) {
      std::mt19937_64 rng(trace.scenario.seed * 0x9E3779B97F4A7C15ULL + 0xA5A5A5A5ULL);
      std::uniform_int_distribution<long> pick(1, T);
      for (int i = 0; i < spec.samples; ++i) {
        long a = pick(rng), b = pick(rng);
        push(std::min(a, b), std::max(a, b));
      }
    }
  }
  // scenario stages
  for (std::size_t i = 0; i < trace.scenario.stage_starts.size(); ++i) {
    long r = trace.scenario.stage_starts[i];
    long s = (i + 1 < trace.scenario.stage_starts.size()) ? trace.scenario.stage_starts[i + 1] - 1 : T;
    push(r, std::min(s, T));
  }
  return family;
}

std::optional<long> constructive_marker_cover(const std::vector<long>& markers, long r, long s) {
  // first marker strictly after r, last marker at or before s
  auto pit = std::upper_bound(markers.begin(), markers.end(), r);
  if (pit == markers.end() || *pit > s) return 0;
  auto qit = std::upper_bound(markers.begin(), markers.end(), s);
  long p = static_cast<long>(pit - markers.begin()) + 1;  // 1-based marker index
  long q = static_cast<long>(qit - markers.begin());
  if (q < p) return 0;
  return marker_cover(p, q).v();
}

}  // namespace

AuditResult audit_run(const RunTrace& trace, const IntervalFamilySpec& family_spec,
                      const AuditOptions& options) {
  const long T = trace.horizon();
  if (T < 1) throw std::invalid_argument("audit_run: empty trace");
  const Domain& domain = trace.scenario.domain;
  const double D = domain.diameter();
  const double H = 1.0 / (D * D);
  const double delta = trace.delta;
  const double C = trace.threshold;

  AuditResult result;

  // loss-range audit: the guarantees assume values in [0, 1]
  for (long t = 1; t <= T; ++t) {
    if (trace.losses[t - 1] < -options.slack || trace.losses[t - 1] > 1.0 + options.slack) {
      RegretReport rep;
      rep.check = "loss-range";
      rep.r = rep.s = t;
      rep.regret = trace.losses[t - 1];
      rep.bound = 1.0;
      rep.margin = std::min(trace.losses[t - 1], 1.0 - trace.losses[t - 1]);
      rep.passed = false;
      result.reports.push_back(rep);
    }
  }

  std::vector<double> loss_prefix(T + 1, 0.0);
  for (long t = 1; t <= T; ++t) loss_prefix[t] = loss_prefix[t - 1] + trace.losses[t - 1];
  auto learner_loss = [&](long r, long s) { return loss_prefix[s] - loss_prefix[r - 1]; };

  ComparatorOracle oracle(trace.targets, domain);

  auto finish = [&](RegretReport& rep) {
    rep.margin = rep.bound - rep.regret;
    rep.passed = rep.margin >= -options.slack;
    result.reports.push_back(rep);
  };

  const std::vector<Interval> family = build_family(trace, family_spec);

  if (trace.kind == LearnerKind::Sogd) {
    // the scale-free bound is anytime but always anchored at round 1
    std::set<long> ends;
    for (const Interval& iv : family) ends.insert(iv.end);
    for (long s : ends) {
      auto [w_star, l_star] = oracle.best(1, s);
      RegretReport rep;
      rep.check = "prefix-regret";
      rep.r = 1;
      rep.s = s;
      rep.comparator = w_star;
      rep.comparator_loss = l_star;
      rep.regret = learner_loss(1, s) - l_star;
      rep.bound = sogd_regret_bound(H, D, delta, l_star);
      finish(rep);
    }
  } else if (trace.kind == LearnerKind::OgdConstant) {
    auto [w_star, l_star] = oracle.best(1, T);
    RegretReport rep;
    rep.check = "fixed-step-regret";
    rep.r = 1;
    rep.s = T;
    rep.comparator = w_star;
    rep.comparator_loss = l_star;
    rep.regret = learner_loss(1, T) - l_star;
    rep.bound = ogd_regret_bound(H, D / std::sqrt(2.0), l_star);
    finish(rep);
  } else if (trace.kind == LearnerKind::Sacs) {
    for (const Interval& iv : family) {
      auto [w_star, l_star] = oracle.best(iv.start, iv.end);
      RegretReport rep;
      rep.check = "interval-regret";
      rep.r = iv.start;
      rep.s = iv.end;
      rep.comparator = w_star;
      rep.comparator_loss = l_star;
      rep.regret = learner_loss(iv.start, iv.end) - l_star;
      const double v = static_cast<double>(cgc_cover(iv.start, iv.end).v());
      const double a = options.offset_scale * interval_bound_offset(iv.end, H, D, delta);
      const double b = interval_bound_slope(iv.end, H, D);
      rep.bound = v * a + std::sqrt(v * b * l_star);
      finish(rep);
    }
  } else if (trace.kind == LearnerKind::SacsCpgc) {
    for (const Interval& iv : family) {
      auto [w_star, l_star] = oracle.best(iv.start, iv.end);
      RegretReport rep;
      rep.check = "interval-regret-adaptive";
      rep.r = iv.start;
      rep.s = iv.end;
      rep.comparator = w_star;
      rep.comparator_loss = l_star;
      rep.regret = learner_loss(iv.start, iv.end) - l_star;
      const double prefix_loss = oracle.loss_at(w_star, 1, iv.end);
      const double c = loss_adaptive_log_factor(iv.end, prefix_loss, C);
      const double a = options.offset_scale * cpgc_bound_offset(c, H, D, delta);
      const double b = cpgc_bound_slope(c, H, D);
      double v = std::ceil(std::log2(2.0 + 4.0 * l_star / C));
      if (auto cv = constructive_marker_cover(trace.marker_rounds, iv.start, iv.end)) {
        v = std::min(v, static_cast<double>(*cv));
      }
      rep.bound = 2.0 * (C + 1.0) + 1.5 * c + v * a + std::sqrt(v * b * l_star);
      finish(rep);
    }

    // markers cannot outpace the best prefix comparator's loss
    long m = 0;
    for (long t = 1; t <= T; ++t) {
      if (trace.marker_flags[t - 1]) ++m;
      auto [w_star, l_star] = oracle.best(1, t);
      RegretReport rep;
      rep.check = "marker-count";
      rep.r = 1;
      rep.s = t;
      rep.comparator_loss = l_star;
      rep.regret = static_cast<double>(m);
      rep.bound = static_cast<double>(marker_count_limit(C, l_star));
      finish(rep);
    }

    // every completed segment forced at least C/4 loss on any comparator
    for (std::size_t i = 0; i + 1 < trace.marker_rounds.size(); ++i) {
      const long r = trace.marker_rounds[i];
      const long s = trace.marker_rounds[i + 1] - 1;
      auto [w_star, l_star] = oracle.best(r, s);
      RegretReport rep;
      rep.check = "segment-loss-floor";
      rep.r = r;
      rep.s = s;
      rep.comparator = w_star;
      rep.comparator_loss = l_star;
      rep.regret = C / 4.0;  // required floor
      rep.bound = l_star;    // measured comparator loss must exceed it
      finish(rep);
    }
  }

  // aggregation (meta-level) regret per expert, anytime over its life
  if (trace.kind == LearnerKind::Sacs || trace.kind == LearnerKind::SacsCpgc) {
    for (const RunTrace::ExpertStream& es : trace.experts) {
      double expert_sum = 0.0;
      for (std::size_t j = 0; j < es.losses.size(); ++j) {
        const long t = es.start + static_cast<long>(j);
        expert_sum += es.losses[j];
        RegretReport rep;
        rep.r = es.start;
        rep.s = t;
        rep.regret = learner_loss(es.start, t) - expert_sum;
        if (trace.kind == LearnerKind::Sacs) {
          rep.check = "aggregation-regret";
          rep.bound = meta_regret_bound(t, expert_sum);
        } else {
          rep.check = "aggregation-regret-adaptive";
          auto [w_star, l_star] = oracle.best(1, t);
          const double c = loss_adaptive_log_factor(t, l_star, C);
          rep.bound = c + std::sqrt(2.0 * c * expert_sum);
        }
        finish(rep);
      }
    }
  }

  // anytime per-interval regret from each expert's start (plain variant)
  if (trace.kind == LearnerKind::Sacs) {
    for (const RunTrace::ExpertStream& es : trace.experts) {
      for (std::size_t j = 0; j < es.losses.size(); ++j) {
        const long t = es.start + static_cast<long>(j);
        auto [w_star, l_star] = oracle.best(es.start, t);
        RegretReport rep;
        rep.check = "interval-anytime";
        rep.r = es.start;
        rep.s = t;
        rep.comparator = w_star;
        rep.comparator_loss = l_star;
        rep.regret = learner_loss(es.start, t) - l_star;
        rep.bound = options.offset_scale * interval_bound_offset(t, H, D, delta) +
                    std::sqrt(interval_bound_slope(t, H, D) * l_star);
        finish(rep);
      }
    }
  }

  auto sort_key = [](const RegretReport& r) {
    return std::isnan(r.margin) ? -std::numeric_limits<double>::infinity() : r.margin;
  };
  std::stable_sort(result.reports.begin(), result.reports.end(),
                   [&](const RegretReport& a, const RegretReport& b) {
                     return sort_key(a) < sort_key(b);
                   });
  long failures = 0;
  for (const RegretReport& rep : result.reports)
    if (!rep.passed) ++failures;
  result.passed = failures == 0;
  result.notes.push_back("reports=" + std::to_string(result.reports.size()) +
                         " violations=" + std::to_string(failures));
  return result;
}

}  // namespace adaregret
