#pragma once

#include <array>
#include <complex>

namespace kitzb {

/// Kitaev chain parameters. Energies are in units of the pairing amplitude d
/// by convention (hbar = 1, lattice constant = 1).
struct ChainParams {
  double mu = 0.0;  ///< chemical potential
  double tp = 1.0;  ///< nearest-neighbour tunneling integral
  double d = 1.0;   ///< superconducting pairing amplitude, d > 0
  int n_sites = 256;
};

/// Throws std::invalid_argument unless d > 0 and n_sites is even and >= 8.
void validate(const ChainParams& params);

/// Zone-centered Brillouin grid, k_m = 2*pi*m/N - pi for m = 0..N-1.
double brillouin_k(int n_sites, int m);

/// Band dispersion xi(k) = -mu - 2 tp cos(k). Even in k.
double xi(const ChainParams& params, double k);

/// Pairing gap Delta(k) = i 2 d sin(k). Odd in k.
std::complex<double> gap(const ChainParams& params, double k);

/// Effective per-mode "magnetic field" of the two-level problem:
/// strength sqrt(xi^2 + 4 d^2 sin^2 k), axis (0, -2d sin k, xi)/strength.
/// At a gap closing the strength vanishes, the axis is the zero vector and
/// the field is flagged degenerate.
struct EffectiveField {
  double strength = 0.0;
  std::array<double, 3> axis{0.0, 0.0, 0.0};
  bool degenerate = false;
};

EffectiveField effective_field(const ChainParams& params, double k);

/// True iff |mu| <= tol*d and |tp - d| <= tol*d: the parameter point where
/// the field strength is k-independent and its angle exactly linear in k,
/// giving distortion-free oscillations for packets of any width.
bool is_magic(const ChainParams& params, double tol);

/// First-order (small-k) oscillation predictors. Valid for mu + 2 tp > 0.
struct ZbPrediction {
  double omega;      ///< angular frequency 2(mu + 2 tp)
  double period;     ///< pi/(mu + 2 tp)
  double amplitude;  ///< 2d/(mu + 2 tp), in lattice sites
};

/// Throws std::domain_error for mu + 2 tp <= 0 (unsupported branch).
ZbPrediction approx_zb_parameters(const ChainParams& params);

}  // namespace kitzb
