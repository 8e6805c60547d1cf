#pragma once

#include <utility>
#include <vector>

#include "kitzb/state.hpp"

namespace kitzb {

/// Numeric failure during a run (seam escalation, extraction failure, ...).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Time series of wavepacket observables. Mean positions are relative to the
/// unwrapping reference and carry the component weights (see mean_positions);
/// separation = mean_j_particle - mean_j_hole.
struct TrajectoryRecord {
  std::vector<double> times;
  std::vector<double> mean_j_particle;
  std::vector<double> mean_j_hole;
  std::vector<double> separation;
  std::vector<double> norm_particle;
  std::vector<double> norm_hole;
  std::vector<std::pair<double, std::vector<double>>> snapshots;
};

/// Component-weighted mean positions about `reference` (site units, may be
/// fractional): <j_e> = sum_j (j - reference) |particle_j|^2, and likewise for
/// the hole. The sums are NOT divided by the component norms, so an
/// equal-weight spinor contributes half-unit displacements. Coordinates are
/// unwrapped to [-N/2, N/2) about the reference. Throws NumericError when more
/// than 1% of the total norm sits within 2 sites of the seam opposite the
/// reference.
std::pair<double, double> mean_positions(const SpinorField& state, double reference);

/// Same, with each component mean divided by its norm (the packet-center
/// distance convention). A component with vanishing norm reports 0.
std::pair<double, double> mean_positions_normalized(const SpinorField& state,
                                                    double reference);

/// Density center of mass on the ring (circular mean), the default unwrapping
/// reference for trajectories.
double packet_center(const SpinorField& state);

struct ZbMeasurement {
  double amplitude;  // peak-to-trough separation swing, in sites
  double period;     // mean spacing of separation maxima
};

struct SeriesPeak {
  double time;
  double value;
};

/// Local maxima of the separation series, refined by three-point quadratic
/// interpolation.
std::vector<SeriesPeak> separation_peaks(const TrajectoryRecord& record);

/// Oscillation amplitude and period from a trajectory with modulation off.
/// Requires at least 2 detected separation maxima (throws NumericError).
ZbMeasurement extract_zb(const TrajectoryRecord& record);

/// |<a|b>| over both components; global-phase invariant, 1 for identical rays.
double profile_fidelity(const SpinorField& a, const SpinorField& b);

/// Signed site occupancy |particle_j|^2 - |hole_j|^2 (negative = hole).
std::vector<double> occupation_profile(const SpinorField& state);

}  // namespace kitzb
