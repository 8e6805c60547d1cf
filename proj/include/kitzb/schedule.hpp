#pragma once

#include <cstdint>
#include <vector>

#include "kitzb/model.hpp"

namespace kitzb {

/// Piecewise-constant sign of the tunneling integral. Segment boundaries live
/// on an integer tick grid in units of the half oscillation period T/2, so a
/// boundary time is always exactly start_tick * half_period: no accumulated
/// float drift, resonance stays exact.
struct ScheduleSegment {
  std::int64_t start_tick = 0;
  int sign = +1;  // +1 or -1
};

struct Schedule {
  std::vector<ScheduleSegment> segments;  // empty = sign +1 everywhere
  double half_period = 0.0;               // T/2 = pi/(2(mu + 2 tp))
  std::int64_t total_ticks = 0;           // extent of the designed pattern

  double boundary_time(std::size_t i) const {
    return static_cast<double>(segments[i].start_tick) * half_period;
  }
};

/// Validates ordering (start_ticks strictly increasing from 0) and signs.
Schedule make_schedule(std::vector<ScheduleSegment> segments, double half_period);

/// Signs alternate +1, -1, ... on 2*n_periods consecutive ticks. Warns on
/// stderr when the parameters are not (near-)magic, since the flip cadence is
/// resonant only there.
Schedule make_resonant_schedule(const ChainParams& params, int n_periods);

/// Alternating block of on_periods, then a modulation-off block (sign held at
/// +1) of stop_half_periods ticks, then an alternating block of resume_periods.
Schedule make_windowed_schedule(const ChainParams& params, int on_periods,
                                int stop_half_periods, int resume_periods);

/// Sign of the active segment at time t >= 0. Boundaries are right-continuous
/// (the new sign applies at the boundary instant); past the last segment the
/// last sign persists; empty schedule means +1.
int tp_sign_at(const Schedule& schedule, double t);

}  // namespace kitzb
