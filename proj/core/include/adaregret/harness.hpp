#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adaregret/learner.hpp"
#include "adaregret/scenario.hpp"
#include "adaregret/sogd.hpp"

namespace adaregret {

enum class LearnerKind { Sogd, OgdConstant, Sacs, SacsCpgc };

std::string to_string(LearnerKind k);
std::optional<LearnerKind> learner_kind_from_string(const std::string& s);

/// Everything recorded while replaying a scenario through a learner; enough
/// to audit every bound offline without re-running.
struct RunTrace {
  Scenario scenario;
  LearnerKind kind = LearnerKind::Sacs;
  double delta = 1.0;
  double threshold = 0.0;  // restart threshold, SacsCpgc only
  std::vector<Vec> targets;  // per-round quadratic targets
  std::vector<double> losses;
  std::vector<Vec> predictions;
  std::vector<int> active_experts;
  std::vector<char> marker_flags;
  std::vector<long> marker_rounds;
  struct ExpertStream {
    long start = 0;                // first round the expert was alive
    std::vector<double> losses;    // one entry per round of its life
  };
  std::vector<ExpertStream> experts;

  long horizon() const { return static_cast<long>(losses.size()); }
};

RunTrace run_scenario(Learner& learner, const Scenario& scenario, LearnerKind kind,
                      double delta, double threshold = 0.0);

/// Convenience: build the learner named by `kind` and replay the scenario.
/// The OGD baseline receives B = D/sqrt(2) and L = the hindsight-optimal
/// full-horizon comparator loss.
RunTrace run_scenario(const Scenario& scenario, LearnerKind kind, double delta,
                      std::optional<double> threshold = std::nullopt);

/// Hindsight comparator for the shifted-quadratic family, answered in O(d)
/// per interval from prefix sums: the minimizer is the projected target mean.
class ComparatorOracle {
 public:
  ComparatorOracle(const std::vector<Vec>& targets, const Domain& domain);

  /// (w*, L_r^s) over the closed round range [r, s], 1-based.
  std::pair<Vec, double> best(long r, long s) const;

  /// Cumulative loss of a fixed point over [r, s].
  double loss_at(const Vec& w, long r, long s) const;

 private:
  const Domain* domain_;
  double inv_two_d2_;
  std::vector<Vec> prefix_target_sum_;    // index t: sum of targets over [1, t]
  std::vector<double> prefix_target_sq_;  // index t: sum of ||target||^2
};

/// General-purpose hindsight comparator: projected gradient descent on the
/// summed loss, run until the gradient-mapping norm drops below `tol`.
std::pair<Vec, double> best_comparator(const std::vector<LossFunction>& losses,
                                       const Domain& domain, double tol = 1e-8,
                                       long max_iters = 200000);

/// Sum of recorded learner losses over [r, s] minus the comparator loss.
double interval_regret(const RunTrace& trace, long r, long s, double comparator_loss);

struct RegretReport {
  std::string check;  // which inequality this report audits
  long r = 0;
  long s = 0;
  Vec comparator;
  double comparator_loss = 0.0;
  double regret = 0.0;
  double bound = 0.0;
  double margin = 0.0;  // bound - regret; pass iff margin >= -slack
  bool passed = false;
};

struct IntervalFamilySpec {
  enum class Kind { Dyadic, Sampled, Exhaustive };
  Kind kind = Kind::Sampled;
  int samples = 1000;  // random intervals added on top of the dyadic family
};

struct AuditOptions {
  double slack = 1e-6;        // floating-point forgiveness on margins
  double offset_scale = 1.0;  // scales the a(t)-style offsets; < 1 corrupts
                              // the auditor (negative-control mode)
};

struct AuditResult {
  std::vector<RegretReport> reports;  // sorted by margin, tightest first
  bool passed = true;
  std::vector<std::string> notes;
};

/// Audits a finished run against the closed-form bounds matching its
/// learner, over all dyadic intervals plus sampled random intervals plus the
/// scenario's stages, and layers the learner-specific checks on top
/// (aggregation regret per expert; marker counts and per-segment comparator
/// loss floors for the problem-dependent variant).
AuditResult audit_run(const RunTrace& trace, const IntervalFamilySpec& family,
                      const AuditOptions& options = {});

}  // namespace adaregret
