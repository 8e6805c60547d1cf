#pragma once

#include <Eigen/Core>

#include "kitzb/model.hpp"
#include "kitzb/state.hpp"

namespace kitzb {

/// Dense 2N x 2N real-space Hamiltonian on the stacked (particle; hole)
/// amplitude vector, built term by term from the chain couplings:
///   particle block  -mu on the diagonal, -tp on nearest neighbours (periodic)
///   hole block      the negative of the particle block
///   pairing blocks  +/-d entries connecting site j to the neighbours of its
///                   mirror site -j, the real-space image of the gap coupling
///                   particle momentum k to hole momentum -k.
/// Fourier transforming with the paired-mode convention block-diagonalizes it
/// into the 2x2 per-mode Hamiltonians exactly.
struct BdgMatrix {
  Eigen::MatrixXcd h;
};

BdgMatrix build_bdg_matrix(const ChainParams& params, int tp_sign);

/// Brute-force propagation exp(-i H t) via dense eigendecomposition, fully
/// independent of the paired-FFT code path. Requires n_sites <= 2048.
SpinorField evolve_oracle(const SpinorField& state, const ChainParams& params,
                          int tp_sign, double t);

/// Cached eigendecomposition for repeated propagation with one tp sign.
class OraclePropagator {
 public:
  OraclePropagator(const ChainParams& params, int tp_sign);
  SpinorField apply(const SpinorField& state, double t) const;

 private:
  Eigen::VectorXd eigenvalues_;
  Eigen::MatrixXcd eigenvectors_;
  int n_sites_;
};

}  // namespace kitzb
