#include "kitzb/model.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kitzb {

void validate(const ChainParams& params) {
  if (!(params.d > 0.0)) {
    throw std::invalid_argument("ChainParams: pairing amplitude d must be > 0");
  }
  if (params.n_sites < 8 || params.n_sites % 2 != 0) {
    throw std::invalid_argument("ChainParams: n_sites must be even and >= 8");
  }
}

double brillouin_k(int n_sites, int m) {
  return 2.0 * std::numbers::pi * m / n_sites - std::numbers::pi;
}

double xi(const ChainParams& params, double k) {
  return -params.mu - 2.0 * params.tp * std::cos(k);
}

std::complex<double> gap(const ChainParams& params, double k) {
  return {0.0, 2.0 * params.d * std::sin(k)};
}

EffectiveField effective_field(const ChainParams& params, double k) {
  const double hz = xi(params, k);
  const double hy = -2.0 * params.d * std::sin(k);
  EffectiveField field;
  field.strength = std::hypot(hz, hy);
  const double scale = std::abs(params.mu) + 2.0 * std::abs(params.tp) + 2.0 * params.d;
  if (field.strength <= 1e-12 * scale) {
    field.degenerate = true;
    return field;
  }
  field.axis = {0.0, hy / field.strength, hz / field.strength};
  return field;
}

bool is_magic(const ChainParams& params, double tol) {
  if (tol < 0.0) {
    throw std::invalid_argument("is_magic: tol must be >= 0");
  }
  return std::abs(params.mu) <= tol * params.d &&
         std::abs(params.tp - params.d) <= tol * params.d;
}

ZbPrediction approx_zb_parameters(const ChainParams& params) {
  const double gap0 = params.mu + 2.0 * params.tp;
  if (!(gap0 > 0.0)) {
    throw std::domain_error(
        "approx_zb_parameters: branch mu + 2 tp <= 0 is not supported");
  }
  return {2.0 * gap0, std::numbers::pi / gap0, 2.0 * params.d / gap0};
}

}  // namespace kitzb
