#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "adaregret/harness.hpp"

namespace adaregret::cli {

using ordered_json = nlohmann::ordered_json;

struct RunConfig {
  LearnerKind learner = LearnerKind::Sacs;
  double delta = 1.0;
  std::optional<double> threshold;  // SacsCpgc override
  IntervalFamilySpec family;
  Scenario scenario;
  std::vector<std::uint64_t> seeds;  // empty: use scenario.seed only
};

/// Parses and validates a config document; throws std::invalid_argument
/// naming the offending field.
RunConfig parse_config(const ordered_json& j);
RunConfig load_config(const std::filesystem::path& path);

ordered_json scenario_to_json(const Scenario& s);
ordered_json config_to_json(const RunConfig& c);

/// Order-insensitive digest of the scenario (seed included); used to pair a
/// trace file with the config that produced it.
std::uint64_t scenario_hash(const Scenario& s);

void write_trace_csv(const std::filesystem::path& path, const RunTrace& trace);

struct TraceFile {
  std::uint64_t scenario_hash = 0;
  std::string learner;
  double delta = 0.0;
  double threshold = 0.0;
  std::uint64_t seed = 0;
  long horizon = 0;
  std::vector<double> losses;  // learner_loss column
};
TraceFile read_trace_csv(const std::filesystem::path& path);

/// Deterministic audit summary: config echo, per-interval reports, counts
/// per check, and the overall verdict.
ordered_json summary_json(const RunConfig& config, const RunTrace& trace,
                          const AuditResult& audit);

void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace adaregret::cli
