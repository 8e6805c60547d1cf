#pragma once

#include <iosfwd>
#include <string>

#include "kitzb/config.hpp"
#include "kitzb/observables.hpp"

namespace kitzb {

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Executes a validated configuration and writes the trajectory CSV, one
/// snapshot CSV per requested time, and (engine = both) the spectral-vs-oracle
/// comparison CSV. Numeric columns use the shortest round-trip decimal
/// representation, so identical inputs give byte-identical files.
struct RunResult {
  TrajectoryRecord trajectory;
  double max_state_diff = 0.0;  // engine = both only
};

RunResult run(const RunConfig& config);

void write_trajectory_csv(std::ostream& out, const TrajectoryRecord& record);
TrajectoryRecord read_trajectory_csv(std::istream& in);

/// Reads a trajectory CSV and measures the separation oscillation.
ZbMeasurement zb_extract_file(const std::string& csv_path);

}  // namespace kitzb
