#include "kitzb/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace kitzb {

namespace {

double wrap_rel(double j, double reference, int n) {
  double rel = j - reference;
  rel -= n * std::round(rel / n);
  return rel;
}

struct WeightedMeans {
  double mean_p, mean_h, norm_p, norm_h;
};

WeightedMeans weighted_means(const SpinorField& state, double reference) {
  const int n = state.n_sites;
  WeightedMeans m{0.0, 0.0, 0.0, 0.0};
  double seam_norm = 0.0;
  const double seam = reference + n / 2.0;
  for (int j = 0; j < n; ++j) {
    const double pp = std::norm(state.particle[j]);
    const double ph = std::norm(state.hole[j]);
    const double rel = wrap_rel(j, reference, n);
    m.mean_p += rel * pp;
    m.mean_h += rel * ph;
    m.norm_p += pp;
    m.norm_h += ph;
    if (std::abs(wrap_rel(j, seam, n)) <= 2.0) seam_norm += pp + ph;
  }
  if (seam_norm > 0.01 * (m.norm_p + m.norm_h)) {
    throw NumericError(
        "mean_positions: more than 1% of the norm lies within 2 sites of the "
        "periodic seam; mean positions are unreliable");
  }
  return m;
}

}  // namespace

std::pair<double, double> mean_positions(const SpinorField& state, double reference) {
  const auto m = weighted_means(state, reference);
  return {m.mean_p, m.mean_h};
}

std::pair<double, double> mean_positions_normalized(const SpinorField& state,
                                                    double reference) {
  const auto m = weighted_means(state, reference);
  return {m.norm_p > 1e-14 ? m.mean_p / m.norm_p : 0.0,
          m.norm_h > 1e-14 ? m.mean_h / m.norm_h : 0.0};
}

double packet_center(const SpinorField& state) {
  const int n = state.n_sites;
  const double step = 2.0 * std::numbers::pi / n;
  cplx dir{0.0, 0.0};
  for (int j = 0; j < n; ++j) {
    const double density = std::norm(state.particle[j]) + std::norm(state.hole[j]);
    dir += density * std::polar(1.0, step * j);
  }
  double center = std::arg(dir) / step;
  if (center < 0.0) center += n;
  return center;
}

std::vector<SeriesPeak> separation_peaks(const TrajectoryRecord& record) {
  const auto& t = record.times;
  const auto& s = record.separation;
  std::vector<SeriesPeak> peaks;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] > s[i - 1] && s[i] >= s[i + 1]) {
      const double denom = s[i - 1] - 2.0 * s[i] + s[i + 1];
      SeriesPeak peak{t[i], s[i]};
      if (denom < 0.0) {
        const double h = 0.5 * (t[i + 1] - t[i - 1]);
        const double shift = 0.5 * (s[i - 1] - s[i + 1]) / denom;
        peak.time = t[i] + shift * h;
        peak.value = s[i] - 0.25 * (s[i - 1] - s[i + 1]) * shift;
      }
      peaks.push_back(peak);
    }
  }
  return peaks;
}

ZbMeasurement extract_zb(const TrajectoryRecord& record) {
  if (record.times.size() < 3) {
    throw NumericError("extract_zb: trajectory too short");
  }
  const auto peaks = separation_peaks(record);
  if (peaks.size() < 2) {
    throw NumericError("extract_zb: fewer than 2 separation peaks detected");
  }
  double high = -std::numeric_limits<double>::infinity();
  for (const auto& p : peaks) high = std::max(high, p.value);

  // troughs, refined the same way, plus the raw series minimum for the case
  // where the minimum sits on the boundary of the record
  const auto& s = record.separation;
  double low = *std::min_element(s.begin(), s.end());
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] < s[i - 1] && s[i] <= s[i + 1]) {
      const double denom = s[i - 1] - 2.0 * s[i] + s[i + 1];
      if (denom > 0.0) {
        const double shift = 0.5 * (s[i - 1] - s[i + 1]) / denom;
        low = std::min(low, s[i] - 0.25 * (s[i - 1] - s[i + 1]) * shift);
      }
    }
  }

  double spacing = 0.0;
  for (std::size_t i = 1; i < peaks.size(); ++i) {
    spacing += peaks[i].time - peaks[i - 1].time;
  }
  return {high - low, spacing / static_cast<double>(peaks.size() - 1)};
}

double profile_fidelity(const SpinorField& a, const SpinorField& b) {
  if (a.n_sites != b.n_sites) {
    throw std::invalid_argument("profile_fidelity: dimension mismatch");
  }
  cplx overlap{0.0, 0.0};
  for (int j = 0; j < a.n_sites; ++j) {
    overlap += std::conj(a.particle[j]) * b.particle[j];
    overlap += std::conj(a.hole[j]) * b.hole[j];
  }
  return std::abs(overlap);
}

std::vector<double> occupation_profile(const SpinorField& state) {
  std::vector<double> profile(state.n_sites);
  for (int j = 0; j < state.n_sites; ++j) {
    profile[j] = std::norm(state.particle[j]) - std::norm(state.hole[j]);
  }
  return profile;
}

}  // namespace kitzb
