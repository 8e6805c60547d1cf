#pragma once

#include <Eigen/Core>
#include <optional>
#include <vector>

#include "kitzb/model.hpp"
#include "kitzb/observables.hpp"
#include "kitzb/schedule.hpp"
#include "kitzb/state.hpp"

namespace kitzb {

/// Exact single-mode time step: unitary to round-off,
/// u = cos(E dt) I - i sin(E dt) (n . sigma) for the mode's field (E, n).
struct ModePropagator {
  Eigen::Matrix2cd u;
};

/// Closed-form exponential of -i H_eff(k; mu, tp_sign*tp, d) dt. Identity for
/// a degenerate (gap-closing) mode.
ModePropagator propagator(const ChainParams& params, int tp_sign, double k, double dt);

/// Analytic propagation by dt under a fixed tp sign: paired transform, one
/// closed-form rotation per mode, inverse transform. Exact for any dt.
SpinorField evolve(const SpinorField& state, const ChainParams& params,
                   int tp_sign, double dt);

/// Observation grid for a scheduled run: the dt_out grid over [t0, t1], every
/// segment boundary inside the window, the extra times, and t1 itself.
/// Sorted, duplicates removed, so sign flips are hit exactly.
std::vector<double> sample_times(const Schedule& schedule, double t0, double t1,
                                 double dt_out,
                                 const std::vector<double>& extra = {});

/// Streaming segment-exact evolution: states are produced analytically from
/// the most recent segment anchor, so there is no step-composition error
/// inside a constant-sign stretch. Query times must be non-decreasing.
class SpectralSampler {
 public:
  SpectralSampler(const SpinorField& initial, const ChainParams& params,
                  const Schedule& schedule, double t0 = 0.0);
  SpinorField at(double t);

 private:
  std::vector<double> strength_[2], ny_[2], nz_[2];
  std::vector<double> boundary_times_;
  std::vector<int> boundary_signs_;
  KPairedField anchor_;
  double anchor_time_;
  int sign_;
  std::size_t next_boundary_ = 0;
  int workers_;
};

struct EvolveOptions {
  std::vector<double> snapshot_times;  // occupation profiles captured here
  std::optional<double> reference;     // unwrap reference; default: packet center
};

/// Segment-exact scheduled evolution over [t0, t1]: each constant-sign
/// stretch is one analytic propagation, observables are emitted on the dt_out
/// grid plus at every segment boundary.
TrajectoryRecord evolve_scheduled(const SpinorField& state, const ChainParams& params,
                                  const Schedule& schedule, double t0, double t1,
                                  double dt_out, const EvolveOptions& options = {});

/// Sum over modes of s(k)^dag H_eff(k) s(k); conserved within a constant-sign
/// segment.
double energy_expectation(const SpinorField& state, const ChainParams& params,
                          int tp_sign);

}  // namespace kitzb
