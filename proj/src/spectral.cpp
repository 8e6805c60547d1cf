#include "kitzb/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

namespace kitzb {

namespace {

constexpr cplx kI{0.0, 1.0};

ChainParams with_sign(const ChainParams& params, int tp_sign) {
  if (tp_sign != +1 && tp_sign != -1) {
    throw std::invalid_argument("tp_sign must be +1 or -1");
  }
  ChainParams flipped = params;
  flipped.tp = tp_sign * params.tp;
  return flipped;
}

// s -> [cos(E tau) I - i sin(E tau) (n.sigma)] s with n = (0, ny, nz)
inline std::array<cplx, 2> rotate(const std::array<cplx, 2>& s, double strength,
                                  double ny, double nz, double tau) {
  const double c = std::cos(strength * tau);
  const double sn = std::sin(strength * tau);
  const cplx diag = c - kI * sn * nz;
  const double off = sn * ny;
  return {diag * s[0] - off * s[1], off * s[0] + std::conj(diag) * s[1]};
}

int worker_count() {
  if (const char* env = std::getenv("KITZB_THREADS")) {
    const int n = std::atoi(env);
    if (n >= 1) return n;
  }
  return 1;
}

// Chunked deterministic parallel loop; serial for one worker or small grids.
void parallel_modes(int n, int workers, const std::function<void(int, int)>& body) {
  if (workers <= 1 || n < 2048) {
    body(0, n);
    return;
  }
  std::vector<std::thread> pool;
  const int chunk = (n + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int lo = w * chunk;
    const int hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back(body, lo, hi);
  }
  for (auto& t : pool) t.join();
}

}  // namespace

ModePropagator propagator(const ChainParams& params, int tp_sign, double k, double dt) {
  if (dt < 0.0) {
    throw std::invalid_argument("propagator: dt must be >= 0");
  }
  const auto field = effective_field(with_sign(params, tp_sign), k);
  ModePropagator prop;
  if (field.degenerate) {
    prop.u = Eigen::Matrix2cd::Identity();
    return prop;
  }
  const double c = std::cos(field.strength * dt);
  const double s = std::sin(field.strength * dt);
  const double ny = field.axis[1];
  const double nz = field.axis[2];
  prop.u << c - kI * s * nz, -s * ny, s * ny, c + kI * s * nz;
  return prop;
}

SpinorField evolve(const SpinorField& state, const ChainParams& params,
                   int tp_sign, double dt) {
  if (dt < 0.0) {
    throw std::invalid_argument("evolve: dt must be >= 0");
  }
  validate(params);
  const ChainParams p = with_sign(params, tp_sign);
  KPairedField kfield = to_k_paired(state);
  const int n = kfield.n_sites;
  for (int m = 0; m < n; ++m) {
    const auto field = effective_field(p, brillouin_k(n, m));
    kfield.modes[m] = rotate(kfield.modes[m], field.strength, field.axis[1],
                             field.axis[2], dt);
  }
  return from_k_paired(kfield);
}

double energy_expectation(const SpinorField& state, const ChainParams& params,
                          int tp_sign) {
  const ChainParams p = with_sign(params, tp_sign);
  const KPairedField kfield = to_k_paired(state);
  double energy = 0.0;
  for (int m = 0; m < kfield.n_sites; ++m) {
    const double k = brillouin_k(kfield.n_sites, m);
    const double hz = xi(p, k);
    const cplx hoff = gap(p, k);  // (1,2) entry of the mode Hamiltonian
    const auto& s = kfield.modes[m];
    energy += hz * (std::norm(s[0]) - std::norm(s[1])) +
              2.0 * std::real(std::conj(s[0]) * hoff * s[1]);
  }
  return energy;
}

std::vector<double> sample_times(const Schedule& schedule, double t0, double t1,
                                 double dt_out, const std::vector<double>& extra) {
  if (t1 < t0) throw std::invalid_argument("sample_times: t1 must be >= t0");
  if (!(dt_out > 0.0)) throw std::invalid_argument("sample_times: dt_out must be > 0");
  std::vector<double> times;
  for (std::size_t i = 0;; ++i) {
    const double t = t0 + static_cast<double>(i) * dt_out;
    if (t > t1) break;
    times.push_back(t);
  }
  for (std::size_t i = 0; i < schedule.segments.size(); ++i) {
    const double b = schedule.boundary_time(i);
    if (b > t0 && b <= t1) times.push_back(b);
  }
  for (double t : extra) {
    if (t >= t0 && t <= t1) times.push_back(t);
  }
  times.push_back(t1);
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  return times;
}

SpectralSampler::SpectralSampler(const SpinorField& initial, const ChainParams& params,
                                 const Schedule& schedule, double t0)
    : anchor_(to_k_paired(initial)),
      anchor_time_(t0),
      sign_(tp_sign_at(schedule, t0)),
      workers_(worker_count()) {
  validate(params);
  const int n = params.n_sites;
  for (int si = 0; si < 2; ++si) {
    const ChainParams p = with_sign(params, si == 0 ? +1 : -1);
    strength_[si].resize(n);
    ny_[si].resize(n);
    nz_[si].resize(n);
    for (int m = 0; m < n; ++m) {
      const auto field = effective_field(p, brillouin_k(n, m));
      strength_[si][m] = field.strength;
      ny_[si][m] = field.axis[1];
      nz_[si][m] = field.axis[2];
    }
  }
  for (std::size_t i = 0; i < schedule.segments.size(); ++i) {
    const double b = schedule.boundary_time(i);
    if (b > t0) {
      boundary_times_.push_back(b);
      boundary_signs_.push_back(schedule.segments[i].sign);
    }
  }
}

SpinorField SpectralSampler::at(double t) {
  if (t < anchor_time_) {
    throw std::invalid_argument("SpectralSampler: query times must be non-decreasing");
  }
  while (next_boundary_ < boundary_times_.size() &&
         boundary_times_[next_boundary_] <= t) {
    const double tau = boundary_times_[next_boundary_] - anchor_time_;
    const int si = sign_ > 0 ? 0 : 1;
    for (std::size_t m = 0; m < anchor_.modes.size(); ++m) {
      anchor_.modes[m] =
          rotate(anchor_.modes[m], strength_[si][m], ny_[si][m], nz_[si][m], tau);
    }
    anchor_time_ = boundary_times_[next_boundary_];
    sign_ = boundary_signs_[next_boundary_];
    ++next_boundary_;
  }
  const double tau = t - anchor_time_;
  const int si = sign_ > 0 ? 0 : 1;
  const int n = anchor_.n_sites;
  KPairedField work{std::vector<std::array<cplx, 2>>(n), n};
  parallel_modes(n, workers_, [&](int lo, int hi) {
    for (int m = lo; m < hi; ++m) {
      work.modes[m] =
          rotate(anchor_.modes[m], strength_[si][m], ny_[si][m], nz_[si][m], tau);
    }
  });
  return from_k_paired(work);
}

TrajectoryRecord evolve_scheduled(const SpinorField& state, const ChainParams& params,
                                  const Schedule& schedule, double t0, double t1,
                                  double dt_out, const EvolveOptions& options) {
  if (t0 < 0.0) throw std::invalid_argument("evolve_scheduled: t0 must be >= 0");
  const std::vector<double> times =
      sample_times(schedule, t0, t1, dt_out, options.snapshot_times);
  const double reference =
      options.reference ? *options.reference : packet_center(state);
  std::vector<double> snapshot_times = options.snapshot_times;
  std::sort(snapshot_times.begin(), snapshot_times.end());

  SpectralSampler sampler(state, params, schedule, t0);
  TrajectoryRecord record;
  record.times.reserve(times.size());
  for (double t : times) {
    const SpinorField field = sampler.at(t);
    const auto [mean_p, mean_h] = mean_positions(field, reference);
    record.times.push_back(t);
    record.mean_j_particle.push_back(mean_p);
    record.mean_j_hole.push_back(mean_h);
    record.separation.push_back(mean_p - mean_h);
    record.norm_particle.push_back(field.particle_norm());
    record.norm_hole.push_back(field.hole_norm());
    if (std::binary_search(snapshot_times.begin(), snapshot_times.end(), t)) {
      record.snapshots.emplace_back(t, occupation_profile(field));
    }
  }
  return record;
}

}  // namespace kitzb
