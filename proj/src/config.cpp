#include "kitzb/config.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

namespace kitzb {

namespace {

std::string join(const std::vector<std::string>& problems) {
  std::string msg = "invalid configuration:";
  for (const auto& p : problems) msg += "\n  " + p;
  return msg;
}

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

class Parser {
 public:
  explicit Parser(const std::string& text) {
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line)) {
      ++lineno;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos) {
        fail("line " + std::to_string(lineno) + ": expected key = value");
        continue;
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty()) {
        fail("line " + std::to_string(lineno) + ": empty key");
        continue;
      }
      if (entries_.count(key)) {
        fail("duplicate key '" + key + "'");
        continue;
      }
      entries_[key] = value;
    }
  }

  void fail(std::string problem) { problems_.push_back(std::move(problem)); }

  std::optional<std::string> take(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    std::string value = it->second;
    entries_.erase(it);
    return value;
  }

  double number(const std::string& key, double fallback) {
    auto raw = take(key);
    if (!raw) return fallback;
    return parse_double(key, *raw).value_or(fallback);
  }

  int integer(const std::string& key, int fallback) {
    auto raw = take(key);
    if (!raw) return fallback;
    int value = 0;
    const char* begin = raw->data();
    const char* end = begin + raw->size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
      fail("key '" + key + "': expected an integer, got '" + *raw + "'");
      return fallback;
    }
    return value;
  }

  std::optional<double> parse_double(const std::string& key, const std::string& raw) {
    double value = 0.0;
    const char* begin = raw.data();
    const char* end = begin + raw.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || !std::isfinite(value)) {
      fail("key '" + key + "': expected a number, got '" + raw + "'");
      return std::nullopt;
    }
    return value;
  }

  std::vector<double> number_list(const std::string& key) {
    auto raw = take(key);
    std::vector<double> values;
    if (!raw || trim(*raw).empty()) return values;
    std::istringstream stream(*raw);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (auto v = parse_double(key, trim(item))) values.push_back(*v);
    }
    return values;
  }

  std::string word(const std::string& key, const std::string& fallback) {
    return take(key).value_or(fallback);
  }

  bool has(const std::string& key) const { return entries_.count(key) > 0; }

  void reject_unknown() {
    for (const auto& entry : entries_) {
      fail("unknown key '" + entry.first + "'");
    }
  }

  std::vector<std::string>& problems() { return problems_; }

 private:
  std::map<std::string, std::string> entries_;
  std::vector<std::string> problems_;
};

}  // namespace

ConfigError::ConfigError(std::vector<std::string> problems)
    : std::runtime_error(join(problems)), errors(std::move(problems)) {}

RunConfig parse_config(const std::string& text) {
  Parser parser(text);
  RunConfig config;

  config.params.mu = parser.number("mu", 0.0);
  config.params.tp = parser.number("tp", 1.0);
  config.params.d = parser.number("d", 1.0);
  config.params.n_sites = parser.integer("n_sites", 256);

  const std::string init_kind = parser.word("initial.kind", "delta");
  if (init_kind == "gaussian") {
    config.initial.kind = InitialKind::Gaussian;
  } else if (init_kind == "delta") {
    config.initial.kind = InitialKind::Delta;
  } else {
    parser.fail("key 'initial.kind': expected gaussian or delta, got '" + init_kind + "'");
  }
  config.initial.center = parser.integer("initial.center", config.params.n_sites / 2);
  const bool sigma_given = parser.has("initial.sigma");
  config.initial.sigma = parser.number("initial.sigma", 0.0);
  config.initial.a = {parser.number("initial.a_re", std::real(config.initial.a)),
                      parser.number("initial.a_im", 0.0)};
  config.initial.b = {parser.number("initial.b_re", std::real(config.initial.b)),
                      parser.number("initial.b_im", 0.0)};

  const std::string sched_kind = parser.word("schedule.kind", "off");
  if (sched_kind == "off") {
    config.schedule.kind = ScheduleKind::Off;
  } else if (sched_kind == "resonant") {
    config.schedule.kind = ScheduleKind::Resonant;
  } else if (sched_kind == "windowed") {
    config.schedule.kind = ScheduleKind::Windowed;
  } else {
    parser.fail("key 'schedule.kind': expected off, resonant or windowed, got '" +
                sched_kind + "'");
  }
  config.schedule.n_periods = parser.integer("schedule.n_periods", 0);
  config.schedule.on_periods = parser.integer("schedule.on_periods", 0);
  config.schedule.stop_half_periods = parser.integer("schedule.stop_half_periods", 0);
  config.schedule.resume_periods = parser.integer("schedule.resume_periods", 0);

  config.t_final = parser.number("t_final", 0.0);
  config.dt_out = parser.number("dt_out", 0.0);
  config.snapshot_times = parser.number_list("snapshots");

  config.outputs.trajectory = parser.word("output.trajectory", config.outputs.trajectory);
  config.outputs.snapshot_prefix =
      parser.word("output.snapshot_prefix", config.outputs.snapshot_prefix);
  config.outputs.comparison = parser.word("output.comparison", config.outputs.comparison);

  const std::string engine = parser.word("engine", "spectral");
  if (engine == "spectral") {
    config.engine = Engine::Spectral;
  } else if (engine == "oracle") {
    config.engine = Engine::Oracle;
  } else if (engine == "both") {
    config.engine = Engine::Both;
  } else {
    parser.fail("key 'engine': expected spectral, oracle or both, got '" + engine + "'");
  }

  parser.reject_unknown();

  // cross-field constraints
  if (!(config.params.d > 0.0)) parser.fail("key 'd': pairing amplitude must be > 0");
  if (config.params.n_sites < 8 || config.params.n_sites % 2 != 0) {
    parser.fail("key 'n_sites': must be even and >= 8");
  } else {
    if (config.initial.center < 0 || config.initial.center >= config.params.n_sites) {
      parser.fail("key 'initial.center': must lie in [0, n_sites)");
    }
    if (config.initial.kind == InitialKind::Gaussian) {
      if (!sigma_given) {
        parser.fail("key 'initial.sigma': required for gaussian packets");
      } else if (!(config.initial.sigma > 0.0) ||
                 config.initial.sigma >= config.params.n_sites / 8.0) {
        parser.fail("key 'initial.sigma': must satisfy 0 < sigma < n_sites/8");
      }
    } else if (sigma_given) {
      parser.fail("key 'initial.sigma': only meaningful for gaussian packets");
    }
  }
  const double spinor_norm =
      std::norm(config.initial.a) + std::norm(config.initial.b);
  if (std::abs(spinor_norm - 1.0) > 1e-12) {
    parser.fail(
        "keys 'initial.a_re/a_im/b_re/b_im': spinor must satisfy "
        "|a|^2 + |b|^2 = 1");
  }
  if (!(config.t_final > 0.0)) parser.fail("key 't_final': must be > 0");
  if (!(config.dt_out > 0.0)) parser.fail("key 'dt_out': must be > 0");
  for (double snap : config.snapshot_times) {
    if (snap < 0.0 || snap > config.t_final) {
      parser.fail("key 'snapshots': times must lie in [0, t_final]");
      break;
    }
  }
  if (config.schedule.kind == ScheduleKind::Resonant && config.schedule.n_periods < 1) {
    parser.fail("key 'schedule.n_periods': resonant schedules need n_periods >= 1");
  }
  if (config.schedule.kind != ScheduleKind::Off &&
      !(config.params.mu + 2.0 * config.params.tp > 0.0)) {
    parser.fail("key 'schedule.kind': modulation needs mu + 2 tp > 0");
  }
  if (config.schedule.kind == ScheduleKind::Windowed &&
      (config.schedule.on_periods < 0 || config.schedule.stop_half_periods < 0 ||
       config.schedule.resume_periods < 0)) {
    parser.fail("keys 'schedule.on_periods/stop_half_periods/resume_periods': must be >= 0");
  }
  if (config.engine != Engine::Spectral && config.params.n_sites > 2048) {
    parser.fail("key 'engine': the oracle engine requires n_sites <= 2048");
  }
  if (config.outputs.trajectory.empty()) {
    parser.fail("key 'output.trajectory': must not be empty");
  }

  if (!parser.problems().empty()) {
    throw ConfigError(std::move(parser.problems()));
  }
  return config;
}

}  // namespace kitzb
