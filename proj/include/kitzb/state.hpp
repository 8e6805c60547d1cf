#pragma once

#include <array>
#include <complex>
#include <vector>

namespace kitzb {

using cplx = std::complex<double>;

/// Two-component lattice wavefunction: particle and hole amplitudes per site.
/// Total norm is 1 after construction and is preserved by every evolver.
struct SpinorField {
  std::vector<cplx> particle;
  std::vector<cplx> hole;
  int n_sites = 0;

  double norm() const;
  double particle_norm() const;
  double hole_norm() const;
};

/// Momentum representation used by the per-mode evolution: mode m carries the
/// 2-spinor (f(k_m), h(-k_m)) where f and h are the forward transforms
/// (kernel e^{+i j k}) of the particle and hole site amplitudes. Pairing the
/// hole entry at the negated wavenumber is what couples k and -k components.
struct KPairedField {
  std::vector<std::array<cplx, 2>> modes;
  int n_sites = 0;

  double norm() const;
};

/// Gaussian packet G(j - center) (a, b)^T with |G|^2 of standard deviation
/// sigma, discretely normalized, displacement wrapped on the ring.
/// Requires |a|^2 + |b|^2 = 1 within 1e-12 and 0 < sigma < N/8 (keeps the
/// packet at least 4 sigma away from the periodic seam).
SpinorField gaussian_packet(int n_sites, int center, double sigma, cplx a, cplx b);

/// All amplitude on one site: particle = a, hole = b at `site`.
SpinorField delta_packet(int n_sites, int site, cplx a, cplx b);

/// Particle packet at center + half_separation, hole packet at
/// center - half_separation, both from the same Gaussian with weight 1/sqrt2.
/// Built so the per-mode spinor direction is (1,1)/sqrt2 for every k when
/// center is a reflection-symmetric site (0 or N/2).
SpinorField separated_packet_pair(int n_sites, int center, int half_separation,
                                  double sigma);

KPairedField to_k_paired(const SpinorField& field);
SpinorField from_k_paired(const KPairedField& kfield);

}  // namespace kitzb
