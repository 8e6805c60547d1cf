#include "kitzb/schedule.hpp"

#include <algorithm>
#include <iostream>
#include <stdexcept>

namespace kitzb {

Schedule make_schedule(std::vector<ScheduleSegment> segments, double half_period) {
  if (!(half_period > 0.0)) {
    throw std::invalid_argument("Schedule: half_period must be > 0");
  }
  if (!segments.empty() && segments.front().start_tick != 0) {
    throw std::invalid_argument("Schedule: first segment must start at tick 0");
  }
  for (std::size_t i = 0; i < segments.size(); ++i) {
    if (segments[i].sign != +1 && segments[i].sign != -1) {
      throw std::invalid_argument("Schedule: segment sign must be +1 or -1");
    }
    if (i > 0 && segments[i].start_tick <= segments[i - 1].start_tick) {
      throw std::invalid_argument("Schedule: start_ticks must be strictly increasing");
    }
  }
  Schedule schedule;
  schedule.half_period = half_period;
  schedule.total_ticks = segments.empty() ? 0 : segments.back().start_tick + 1;
  schedule.segments = std::move(segments);
  return schedule;
}

namespace {

double resonant_half_period(const ChainParams& params) {
  return approx_zb_parameters(params).period / 2.0;
}

void append_alternating(std::vector<ScheduleSegment>& segments,
                        std::int64_t from_tick, int n_periods) {
  for (int i = 0; i < 2 * n_periods; ++i) {
    segments.push_back({from_tick + i, i % 2 == 0 ? +1 : -1});
  }
}

}  // namespace

Schedule make_resonant_schedule(const ChainParams& params, int n_periods) {
  if (n_periods < 1) {
    throw std::invalid_argument("make_resonant_schedule: n_periods must be >= 1");
  }
  if (!is_magic(params, 1e-6)) {
    std::cerr << "warning: resonant tp-sign modulation is exact only at "
                 "mu = 0, tp = d; oscillations will dephase\n";
  }
  std::vector<ScheduleSegment> segments;
  append_alternating(segments, 0, n_periods);
  return make_schedule(std::move(segments), resonant_half_period(params));
}

Schedule make_windowed_schedule(const ChainParams& params, int on_periods,
                                int stop_half_periods, int resume_periods) {
  if (on_periods < 0 || stop_half_periods < 0 || resume_periods < 0) {
    throw std::invalid_argument("make_windowed_schedule: counts must be >= 0");
  }
  std::vector<ScheduleSegment> segments;
  std::int64_t tick = 0;
  if (on_periods > 0) {
    append_alternating(segments, tick, on_periods);
    tick += 2 * on_periods;
  }
  if (stop_half_periods > 0) {
    segments.push_back({tick, +1});
    tick += stop_half_periods;
  }
  if (resume_periods > 0) {
    append_alternating(segments, tick, resume_periods);
  }
  return make_schedule(std::move(segments), resonant_half_period(params));
}

int tp_sign_at(const Schedule& schedule, double t) {
  if (t < 0.0) {
    throw std::invalid_argument("tp_sign_at: t must be >= 0");
  }
  if (schedule.segments.empty()) return +1;
  int sign = schedule.segments.front().sign;
  for (const auto& segment : schedule.segments) {
    if (static_cast<double>(segment.start_tick) * schedule.half_period <= t) {
      sign = segment.sign;
    } else {
      break;
    }
  }
  return sign;
}

}  // namespace kitzb
