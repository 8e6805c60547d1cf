#include "kitzb/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <complex>
#include <stdexcept>

namespace kitzb {

namespace {

constexpr int kMaxOracleSites = 2048;

void check_size(int n_sites) {
  if (n_sites > kMaxOracleSites) {
    throw std::invalid_argument(
        "oracle: n_sites exceeds the dense-diagonalization limit of 2048");
  }
}

Eigen::VectorXcd stack(const SpinorField& state) {
  const int n = state.n_sites;
  Eigen::VectorXcd v(2 * n);
  for (int j = 0; j < n; ++j) {
    v[j] = state.particle[j];
    v[n + j] = state.hole[j];
  }
  return v;
}

SpinorField unstack(const Eigen::VectorXcd& v, int n) {
  SpinorField state{std::vector<cplx>(n), std::vector<cplx>(n), n};
  for (int j = 0; j < n; ++j) {
    state.particle[j] = v[j];
    state.hole[j] = v[n + j];
  }
  return state;
}

}  // namespace

BdgMatrix build_bdg_matrix(const ChainParams& params, int tp_sign) {
  validate(params);
  if (tp_sign != +1 && tp_sign != -1) {
    throw std::invalid_argument("build_bdg_matrix: tp_sign must be +1 or -1");
  }
  check_size(params.n_sites);
  const int n = params.n_sites;
  const double tp = tp_sign * params.tp;
  BdgMatrix bdg{Eigen::MatrixXcd::Zero(2 * n, 2 * n)};
  auto& h = bdg.h;
  for (int j = 0; j < n; ++j) {
    const int right = (j + 1) % n;
    const int left = (j + n - 1) % n;
    // particle block and its negative for the hole block
    h(j, j) = -params.mu;
    h(j, right) += -tp;
    h(j, left) += -tp;
    h(n + j, n + j) = params.mu;
    h(n + j, n + right) += tp;
    h(n + j, n + left) += tp;
    // pairing: site j couples to the neighbours of its mirror site -j
    const int mirror_right = ((1 - j) % n + n) % n;  // j + j' = 1 (mod N)
    const int mirror_left = ((-1 - j) % n + n) % n;  // j + j' = -1 (mod N)
    h(j, n + mirror_right) += params.d;
    h(j, n + mirror_left) += -params.d;
    h(n + mirror_right, j) += params.d;
    h(n + mirror_left, j) += -params.d;
  }
  return bdg;
}

OraclePropagator::OraclePropagator(const ChainParams& params, int tp_sign)
    : n_sites_(params.n_sites) {
  const BdgMatrix bdg = build_bdg_matrix(params, tp_sign);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(bdg.h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("oracle: eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

SpinorField OraclePropagator::apply(const SpinorField& state, double t) const {
  if (t < 0.0) {
    throw std::invalid_argument("oracle: t must be >= 0");
  }
  if (state.n_sites != n_sites_) {
    throw std::invalid_argument("oracle: state size mismatch");
  }
  Eigen::VectorXcd coeffs = eigenvectors_.adjoint() * stack(state);
  for (int i = 0; i < coeffs.size(); ++i) {
    coeffs[i] *= std::polar(1.0, -eigenvalues_[i] * t);
  }
  return unstack(eigenvectors_ * coeffs, n_sites_);
}

SpinorField evolve_oracle(const SpinorField& state, const ChainParams& params,
                          int tp_sign, double t) {
  check_size(state.n_sites);
  return OraclePropagator(params, tp_sign).apply(state, t);
}

}  // namespace kitzb
