#include "trace_io.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <string_view>

namespace adaregret::cli {

namespace {

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  if (ec != std::errc{}) throw std::runtime_error("format_double failed");
  return std::string(buf, ptr);
}

double parse_double(std::string_view s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("trace: malformed numeric field '" + std::string(s) + "'");
  }
  return v;
}

template <typename T>
T field(const ordered_json& j, const std::string& name) {
  if (!j.contains(name)) throw std::invalid_argument("config: missing field '" + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw std::invalid_argument("config: bad value for field '" + name + "'");
  }
}

}  // namespace

RunConfig parse_config(const ordered_json& j) {
  RunConfig c;
  auto kind = learner_kind_from_string(field<std::string>(j, "learner"));
  if (!kind) throw std::invalid_argument("config: bad value for field 'learner'");
  c.learner = *kind;
  c.delta = field<double>(j, "delta");
  if (c.delta <= 0.0) throw std::invalid_argument("config: field 'delta' must be positive");
  if (j.contains("threshold") && !j.at("threshold").is_null()) {
    c.threshold = field<double>(j, "threshold");
  }

  if (j.contains("audit")) {
    const ordered_json& a = j.at("audit");
    std::string fam = field<std::string>(a, "family");
    if (fam == "dyadic") c.family.kind = IntervalFamilySpec::Kind::Dyadic;
    else if (fam == "sampled") c.family.kind = IntervalFamilySpec::Kind::Sampled;
    else if (fam == "exhaustive") c.family.kind = IntervalFamilySpec::Kind::Exhaustive;
    else throw std::invalid_argument("config: bad value for field 'audit.family'");
    if (a.contains("samples")) c.family.samples = field<int>(a, "samples");
  }

  if (!j.contains("scenario")) throw std::invalid_argument("config: missing field 'scenario'");
  const ordered_json& s = j.at("scenario");
  c.scenario.horizon = field<long>(s, "horizon");
  c.scenario.dimension = field<int>(s, "dimension");

  if (!s.contains("domain")) throw std::invalid_argument("config: missing field 'scenario.domain'");
  const ordered_json& d = s.at("domain");
  std::string dk = field<std::string>(d, "kind");
  Vec center = field<Vec>(d, "center");
  if (dk == "euclidean-ball") {
    c.scenario.domain = Domain::ball(center, field<double>(d, "radius"));
  } else if (dk == "axis-box") {
    c.scenario.domain = Domain::box(center, field<Vec>(d, "halfwidths"));
  } else {
    throw std::invalid_argument("config: bad value for field 'scenario.domain.kind'");
  }

  c.scenario.stage_starts = field<std::vector<long>>(s, "stage_starts");
  c.scenario.stage_targets = field<std::vector<Vec>>(s, "stage_targets");
  c.scenario.jitter = field<double>(s, "jitter");
  c.scenario.seed = field<std::uint64_t>(s, "seed");
  try {
    validate(c.scenario);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string("config: ") + e.what());
  }

  if (j.contains("seeds")) c.seeds = field<std::vector<std::uint64_t>>(j, "seeds");
  return c;
}

RunConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("config: cannot open " + path.string());
  ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("config: parse error: ") + e.what());
  }
  return parse_config(j);
}

ordered_json scenario_to_json(const Scenario& s) {
  ordered_json d;
  if (s.domain.kind() == DomainKind::Ball) {
    d = {{"kind", "euclidean-ball"}, {"center", s.domain.center()}, {"radius", s.domain.radius()}};
  } else {
    d = {{"kind", "axis-box"}, {"center", s.domain.center()}, {"halfwidths", s.domain.halfwidths()}};
  }
  return ordered_json{{"horizon", s.horizon},
                      {"dimension", s.dimension},
                      {"domain", d},
                      {"stage_starts", s.stage_starts},
                      {"stage_targets", s.stage_targets},
                      {"jitter", s.jitter},
                      {"seed", s.seed}};
}

ordered_json config_to_json(const RunConfig& c) {
  ordered_json a;
  switch (c.family.kind) {
    case IntervalFamilySpec::Kind::Dyadic: a["family"] = "dyadic"; break;
    case IntervalFamilySpec::Kind::Sampled: a["family"] = "sampled"; break;
    case IntervalFamilySpec::Kind::Exhaustive: a["family"] = "exhaustive"; break;
  }
  a["samples"] = c.family.samples;
  ordered_json j{{"learner", to_string(c.learner)}, {"delta", c.delta}};
  if (c.threshold) j["threshold"] = *c.threshold;
  j["audit"] = a;
  j["scenario"] = scenario_to_json(c.scenario);
  return j;
}

std::uint64_t scenario_hash(const Scenario& s) {
  const std::string dump = scenario_to_json(s).dump();
  std::uint64_t h = 1469598103934665603ULL;  // FNV-1a
  for (unsigned char ch : dump) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  return h;
}

void write_trace_csv(const std::filesystem::path& path, const RunTrace& trace) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "# adaregret-trace v1 scenario=" << scenario_hash(trace.scenario)
      << " learner=" << to_string(trace.kind) << " delta=" << format_double(trace.delta)
      << " threshold=" << format_double(trace.threshold) << " seed=" << trace.scenario.seed
      << " horizon=" << trace.horizon() << "\n";
  out << "round,learner_loss,cumulative_loss,active_experts,marker_flag\n";
  double cumulative = 0.0;
  for (long t = 1; t <= trace.horizon(); ++t) {
    cumulative += trace.losses[t - 1];
    out << t << ',' << format_double(trace.losses[t - 1]) << ',' << format_double(cumulative)
        << ',' << trace.active_experts[t - 1] << ',' << int(trace.marker_flags[t - 1]) << "\n";
  }
}

TraceFile read_trace_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("trace: cannot open " + path.string());
  TraceFile tf;
  std::string line;
  if (!std::getline(in, line) || line.rfind("# adaregret-trace v1 ", 0) != 0) {
    throw std::invalid_argument("trace: missing header line");
  }
  std::istringstream hs(line.substr(21));
  std::string token;
  while (hs >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos) continue;
    std::string key = token.substr(0, eq);
    std::string val = token.substr(eq + 1);
    if (key == "scenario") tf.scenario_hash = std::stoull(val);
    else if (key == "learner") tf.learner = val;
    else if (key == "delta") tf.delta = parse_double(val);
    else if (key == "threshold") tf.threshold = parse_double(val);
    else if (key == "seed") tf.seed = std::stoull(val);
    else if (key == "horizon") tf.horizon = std::stol(val);
  }
  if (!std::getline(in, line) || line != "round,learner_loss,cumulative_loss,active_experts,marker_flag") {
    throw std::invalid_argument("trace: missing column header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string_view> cols;
    std::string_view sv = line;
    std::size_t pos = 0;
    while (pos <= sv.size()) {
      std::size_t comma = sv.find(',', pos);
      if (comma == std::string_view::npos) {
        cols.push_back(sv.substr(pos));
        break;
      }
      cols.push_back(sv.substr(pos, comma - pos));
      pos = comma + 1;
    }
    if (cols.size() != 5) throw std::invalid_argument("trace: malformed row '" + line + "'");
    tf.losses.push_back(parse_double(cols[1]));
  }
  return tf;
}

ordered_json summary_json(const RunConfig& config, const RunTrace& trace,
                          const AuditResult& audit) {
  ordered_json j;
  RunConfig echo = config;
  echo.scenario.seed = trace.scenario.seed;  // the seed actually used
  echo.seeds.clear();
  j["config"] = config_to_json(echo);
  j["scenario_hash"] = scenario_hash(trace.scenario);
  j["horizon"] = trace.horizon();
  j["markers"] = trace.marker_rounds;

  auto report_json = [](const RegretReport& r) {
    return ordered_json{{"check", r.check},
                        {"r", r.r},
                        {"s", r.s},
                        {"regret", r.regret},
                        {"bound", r.bound},
                        {"comparator_loss", r.comparator_loss},
                        {"margin", r.margin},
                        {"passed", r.passed}};
  };

  ordered_json intervals = ordered_json::array();
  ordered_json tightest = ordered_json::array();
  std::map<std::string, std::pair<long, long>> per_check;  // check -> (count, violations)
  for (const RegretReport& r : audit.reports) {
    auto& [count, violations] = per_check[r.check];
    ++count;
    if (!r.passed) ++violations;
    const bool family_check = r.check == "interval-regret" || r.check == "interval-regret-adaptive" ||
                              r.check == "prefix-regret" || r.check == "fixed-step-regret";
    if (family_check) intervals.push_back(report_json(r));
    if (tightest.size() < 50 || !r.passed) {
      if (tightest.size() < 200) tightest.push_back(report_json(r));
    }
  }
  ordered_json checks;
  for (const auto& [name, cv] : per_check) {
    checks[name] = ordered_json{{"reports", cv.first}, {"violations", cv.second}};
  }
  j["aggregate"] = ordered_json{{"passed", audit.passed},
                                {"reports", audit.reports.size()},
                                {"checks", checks},
                                {"notes", audit.notes}};
  j["tightest"] = tightest;
  j["interval_reports"] = intervals;
  return j;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

}  // namespace adaregret::cli
