#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "kitzb/model.hpp"
#include "kitzb/state.hpp"

namespace kitzb {

/// All field-level problems found in one parse, each naming the offending key.
struct ConfigError : std::runtime_error {
  explicit ConfigError(std::vector<std::string> problems);
  std::vector<std::string> errors;
};

enum class InitialKind { Gaussian, Delta };
enum class ScheduleKind { Off, Resonant, Windowed };
enum class Engine { Spectral, Oracle, Both };

struct InitialSpec {
  InitialKind kind = InitialKind::Delta;
  int center = -1;       // -1 = n_sites/2
  double sigma = 0.0;    // gaussian only
  cplx a{1.0 / 1.4142135623730951, 0.0};
  cplx b{-1.0 / 1.4142135623730951, 0.0};
};

struct ScheduleSpec {
  ScheduleKind kind = ScheduleKind::Off;
  int n_periods = 0;          // resonant
  int on_periods = 0;         // windowed
  int stop_half_periods = 0;  // windowed
  int resume_periods = 0;     // windowed
};

struct OutputSpec {
  std::string trajectory = "trajectory.csv";
  std::string snapshot_prefix = "snapshot";
  std::string comparison = "comparison.csv";  // engine = both only
};

struct RunConfig {
  ChainParams params;
  InitialSpec initial;
  ScheduleSpec schedule;
  double t_final = 0.0;
  double dt_out = 0.0;
  std::vector<double> snapshot_times;
  OutputSpec outputs;
  Engine engine = Engine::Spectral;
};

/// Parses a key = value document (one pair per line, '#' comments, dotted keys
/// for nested fields). Unknown or duplicate keys are rejected; every
/// constraint violation is collected and reported with its field name.
RunConfig parse_config(const std::string& text);

}  // namespace kitzb
