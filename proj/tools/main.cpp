#include <atomic>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <iostream>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "adaregret/intervals.hpp"
#include "trace_io.hpp"

namespace fs = std::filesystem;
using namespace adaregret;
using namespace adaregret::cli;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitConfig = 2;

int thread_cap() {
  if (const char* env = std::getenv("ADAREGRET_THREADS")) {
    int n = std::atoi(env);
    if (n >= 1) return n;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct SeedOutcome {
  std::uint64_t seed = 0;
  int status = kExitConfig;
  std::string message;
};

SeedOutcome run_one_seed(const RunConfig& config, std::uint64_t seed, const fs::path& dir) {
  SeedOutcome out;
  out.seed = seed;
  try {
    Scenario scenario = config.scenario;
    scenario.seed = seed;
    RunTrace trace = run_scenario(scenario, config.learner, config.delta, config.threshold);
    AuditResult audit = audit_run(trace, config.family);

    fs::create_directories(dir);
    write_trace_csv(dir / "trace.csv", trace);
    write_text(dir / "summary.json", summary_json(config, trace, audit).dump(2) + "\n");

    out.status = audit.passed ? kExitPass : kExitViolation;
    long violations = 0;
    for (const RegretReport& r : audit.reports) {
      if (!r.passed) ++violations;
    }
    out.message = "seed " + std::to_string(seed) + ": " +
                  std::to_string(audit.reports.size()) + " checks, " +
                  std::to_string(violations) + " violations";
  } catch (const std::exception& e) {
    out.status = kExitConfig;
    out.message = "seed " + std::to_string(seed) + ": error: " + e.what();
  }
  return out;
}

int cmd_run(const std::string& config_path, const std::string& out_dir,
            std::optional<std::uint64_t> seed_override) {
  RunConfig config;
  try {
    config = load_config(config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  std::vector<std::uint64_t> seeds;
  if (seed_override) {
    seeds.push_back(*seed_override);
  } else if (!config.seeds.empty()) {
    seeds = config.seeds;
  } else {
    seeds.push_back(config.scenario.seed);
  }

  const fs::path base(out_dir);
  const bool fan_out = seeds.size() > 1;
  std::vector<SeedOutcome> outcomes(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < seeds.size(); i = next.fetch_add(1)) {
      fs::path dir = fan_out ? base / ("seed_" + std::to_string(seeds[i])) : base;
      outcomes[i] = run_one_seed(config, seeds[i], dir);
    }
  };
  int workers = std::min<int>(thread_cap(), static_cast<int>(seeds.size()));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  int status = kExitPass;
  for (const SeedOutcome& o : outcomes) {
    (o.status == kExitPass ? std::cout : std::cerr) << o.message << "\n";
    status = std::max(status, o.status);
  }
  return status;
}

int cmd_audit(const std::string& trace_path, const std::string& config_path) {
  RunConfig config;
  TraceFile file;
  try {
    config = load_config(config_path);
    file = read_trace_csv(trace_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }

  try {
    Scenario scenario = config.scenario;
    scenario.seed = file.seed;
    if (scenario_hash(scenario) != file.scenario_hash) {
      std::cerr << "audit: trace/config scenario mismatch\n";
      return kExitConfig;
    }
    if (file.learner != to_string(config.learner) || file.delta != config.delta) {
      std::cerr << "audit: trace/config learner mismatch\n";
      return kExitConfig;
    }
    if (file.horizon != scenario.horizon ||
        static_cast<long>(file.losses.size()) != scenario.horizon) {
      std::cerr << "audit: trace row count does not match the configured horizon\n";
      return kExitConfig;
    }

    bool range_violation = false;
    for (long t = 0; t < file.horizon; ++t) {
      if (!(file.losses[t] >= 0.0 && file.losses[t] <= 1.0)) {
        std::cerr << "audit: loss out of [0, 1] at round " << (t + 1) << ": "
                  << file.losses[t] << "\n";
        range_violation = true;
      }
    }
    if (range_violation) return kExitViolation;

    RunTrace trace = run_scenario(scenario, config.learner, config.delta, config.threshold);
    for (long t = 0; t < file.horizon; ++t) {
      if (file.losses[t] != trace.losses[t]) {
        std::cerr << "audit: trace loss diverges from the deterministic replay at round "
                  << (t + 1) << "\n";
        return kExitConfig;
      }
    }

    AuditResult audit = audit_run(trace, config.family);
    std::cout << summary_json(config, trace, audit).dump(2) << "\n";
    return audit.passed ? kExitPass : kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "audit: " << e.what() << "\n";
    return kExitConfig;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive-regret online convex optimization toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_dir, trace_path, kind = "cgc";
  long horizon = 64, from = 1, to = 1;
  std::optional<std::uint64_t> seed_override;

  auto* run = app.add_subcommand("run", "Run a learner on a scenario and audit the bounds");
  run->add_option("--config", config_path, "Config file (JSON)")->required();
  run->add_option("--out", out_dir, "Output directory")->required();
  run->add_option("--seed", seed_override, "Override the scenario seed");

  auto* intervals = app.add_subcommand("intervals", "Print an interval-system diagram");
  intervals->add_option("--kind", kind, "gc or cgc")->check(CLI::IsMember({"gc", "cgc"}));
  intervals->add_option("--horizon", horizon, "Rounds to draw")->check(CLI::Range(1L, 65536L));

  auto* cover = app.add_subcommand("cover", "Print the greedy interval cover of a range");
  cover->add_option("--kind", kind, "cgc only")->check(CLI::IsMember({"cgc"}));
  cover->add_option("--from", from, "Range start (1-based)")->required()->check(CLI::PositiveNumber);
  cover->add_option("--to", to, "Range end, inclusive")->required()->check(CLI::PositiveNumber);

  auto* audit = app.add_subcommand("audit", "Re-audit a recorded trace offline");
  audit->add_option("--trace", trace_path, "Trace file from a previous run")->required();
  audit->add_option("--config", config_path, "Config file that produced the trace")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (run->parsed()) return cmd_run(config_path, out_dir, seed_override);
    if (intervals->parsed()) {
      std::cout << render_intervals(kind, horizon);
      return kExitPass;
    }
    if (cover->parsed()) {
      if (to < from) {
        std::cerr << "cover: --to must be >= --from\n";
        return kExitConfig;
      }
      std::cout << render_cover(from, to) << "\n";
      return kExitPass;
    }
    if (audit->parsed()) return cmd_audit(trace_path, config_path);
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
