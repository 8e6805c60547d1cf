#include "kitzb/state.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace kitzb {

namespace {

double norm_of(const std::vector<cplx>& v) {
  double s = 0.0;
  for (const auto& z : v) s += std::norm(z);
  return s;
}

// One FFTW plan pair per lattice size, reused across calls. Plans are created
// with FFTW_ESTIMATE so planning does not touch the transform buffers.
class FftPlans {
 public:
  static FftPlans& instance() {
    static FftPlans plans;
    return plans;
  }

  // sign = FFTW_BACKWARD (+i kernel) or FFTW_FORWARD (-i kernel), in place.
  void transform(std::vector<cplx>& data, int sign) {
    auto* ptr = reinterpret_cast<fftw_complex*>(data.data());
    fftw_plan plan = nullptr;
    {
      std::lock_guard<std::mutex> lock(mutex_);
      auto key = std::make_pair(static_cast<int>(data.size()), sign);
      auto it = cache_.find(key);
      if (it == cache_.end()) {
        plan = fftw_plan_dft_1d(static_cast<int>(data.size()), ptr, ptr, sign,
                                FFTW_ESTIMATE | FFTW_UNALIGNED);
        cache_.emplace(key, plan);
      } else {
        plan = it->second;
      }
    }
    fftw_execute_dft(plan, ptr, ptr);
  }

 private:
  FftPlans() = default;
  struct KeyHash {
    std::size_t operator()(const std::pair<int, int>& k) const {
      return std::hash<long>()((static_cast<long>(k.first) << 2) ^ k.second);
    }
  };
  std::mutex mutex_;
  std::unordered_map<std::pair<int, int>, fftw_plan, KeyHash> cache_;
};

// f[m] = (1/sqrt N) sum_j psi_j e^{+i j k_m} on the zone-centered grid
// k_m = 2 pi m/N - pi; the shift from the zone corner is the (-1)^j twiddle.
std::vector<cplx> forward_dft(const std::vector<cplx>& site_amps) {
  const int n = static_cast<int>(site_amps.size());
  std::vector<cplx> out(site_amps);
  for (int j = 1; j < n; j += 2) out[j] = -out[j];
  FftPlans::instance().transform(out, FFTW_BACKWARD);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (auto& z : out) z *= scale;
  return out;
}

std::vector<cplx> inverse_dft(const std::vector<cplx>& mode_amps) {
  const int n = static_cast<int>(mode_amps.size());
  std::vector<cplx> out(mode_amps);
  FftPlans::instance().transform(out, FFTW_FORWARD);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (int j = 0; j < n; ++j) out[j] *= (j % 2 == 0) ? scale : -scale;
  return out;
}

void check_spinor(cplx a, cplx b) {
  if (std::abs(std::norm(a) + std::norm(b) - 1.0) > 1e-12) {
    throw std::invalid_argument(
        "packet spinor (a, b) must satisfy |a|^2 + |b|^2 = 1");
  }
}

void check_site(int n_sites, int site) {
  if (site < 0 || site >= n_sites) {
    throw std::invalid_argument("packet center must lie in [0, n_sites)");
  }
}

// Wrapped displacement from `center`, in [-N/2, N/2).
int wrapped(int j, int center, int n) {
  int rel = (j - center) % n;
  if (rel < -n / 2) rel += n;
  if (rel >= n / 2) rel -= n;
  return rel;
}

std::vector<double> gaussian_profile(int n_sites, int center, double sigma) {
  if (!(sigma > 0.0) || sigma >= n_sites / 8.0) {
    throw std::invalid_argument(
        "gaussian packet sigma must satisfy 0 < sigma < n_sites/8");
  }
  std::vector<double> g(n_sites);
  double sumsq = 0.0;
  for (int j = 0; j < n_sites; ++j) {
    const double x = wrapped(j, center, n_sites);
    g[j] = std::exp(-x * x / (4.0 * sigma * sigma));
    sumsq += g[j] * g[j];
  }
  const double scale = 1.0 / std::sqrt(sumsq);
  for (auto& v : g) v *= scale;
  return g;
}

}  // namespace

double SpinorField::norm() const { return norm_of(particle) + norm_of(hole); }
double SpinorField::particle_norm() const { return norm_of(particle); }
double SpinorField::hole_norm() const { return norm_of(hole); }

double KPairedField::norm() const {
  double s = 0.0;
  for (const auto& m : modes) s += std::norm(m[0]) + std::norm(m[1]);
  return s;
}

SpinorField gaussian_packet(int n_sites, int center, double sigma, cplx a, cplx b) {
  check_spinor(a, b);
  check_site(n_sites, center);
  const auto g = gaussian_profile(n_sites, center, sigma);
  SpinorField field{std::vector<cplx>(n_sites), std::vector<cplx>(n_sites), n_sites};
  for (int j = 0; j < n_sites; ++j) {
    field.particle[j] = a * g[j];
    field.hole[j] = b * g[j];
  }
  return field;
}

SpinorField delta_packet(int n_sites, int site, cplx a, cplx b) {
  check_spinor(a, b);
  check_site(n_sites, site);
  SpinorField field{std::vector<cplx>(n_sites), std::vector<cplx>(n_sites), n_sites};
  field.particle[site] = a;
  field.hole[site] = b;
  return field;
}

SpinorField separated_packet_pair(int n_sites, int center, int half_separation,
                                  double sigma) {
  check_site(n_sites, center);
  const double w = 1.0 / std::sqrt(2.0);
  const auto gp = gaussian_profile(
      n_sites, ((center + half_separation) % n_sites + n_sites) % n_sites, sigma);
  const auto gh = gaussian_profile(
      n_sites, ((center - half_separation) % n_sites + n_sites) % n_sites, sigma);
  SpinorField field{std::vector<cplx>(n_sites), std::vector<cplx>(n_sites), n_sites};
  for (int j = 0; j < n_sites; ++j) {
    field.particle[j] = w * gp[j];
    field.hole[j] = w * gh[j];
  }
  return field;
}

KPairedField to_k_paired(const SpinorField& field) {
  const int n = field.n_sites;
  const auto f = forward_dft(field.particle);
  const auto h = forward_dft(field.hole);
  KPairedField kfield{std::vector<std::array<cplx, 2>>(n), n};
  for (int m = 0; m < n; ++m) {
    kfield.modes[m] = {f[m], h[(n - m) % n]};
  }
  return kfield;
}

SpinorField from_k_paired(const KPairedField& kfield) {
  const int n = kfield.n_sites;
  std::vector<cplx> f(n), h(n);
  for (int m = 0; m < n; ++m) {
    f[m] = kfield.modes[m][0];
    h[(n - m) % n] = kfield.modes[m][1];
  }
  return {inverse_dft(f), inverse_dft(h), n};
}

}  // namespace kitzb
