#include "tomolab/ensembles.hpp"

#include <cmath>

namespace tomolab {

PerturbedEnsembleParams::PerturbedEnsembleParams(double eps_, int d_, CMat u_)
    : eps(eps_), d(d_), u(std::move(u_)) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("PerturbedEnsembleParams: d must be even and >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("PerturbedEnsembleParams: eps must be in (0,1)");
  if (u.rows() != d || u.cols() != d) throw std::invalid_argument("PerturbedEnsembleParams: unitary dimension mismatch");
  if (!is_unitary(u, 1e-8)) throw std::invalid_argument("PerturbedEnsembleParams: u not unitary");
}

namespace {

DensityMatrix perturbed_state_from_unitary(double eps, int d, const CMat& u) {
  // U Q_{d/2} U^dag = G G^dag for G the first d/2 columns of U.
  const auto g = u.leftCols(d / 2);
  CMat m = (2.0 * eps / d) * (g * g.adjoint());
  m += ((1.0 - eps) / d) * CMat::Identity(d, d);
  return DensityMatrix(std::move(m), Validate::no);
}

void check_perturbed_args(double eps, int d) {
  if (d < 2 || d % 2 != 0) throw std::invalid_argument("perturbed_state: d must be even and >= 2");
  if (!(eps > 0.0 && eps < 1.0)) throw std::invalid_argument("perturbed_state: eps must be in (0,1)");
}

}  // namespace

DensityMatrix perturbed_state(const PerturbedEnsembleParams& p) {
  return perturbed_state_from_unitary(p.eps, p.d, p.u);
}

DensityMatrix perturbed_state(double eps, int d, const HaarUnitary& u) {
  check_perturbed_args(eps, d);
  if (u.dim != d) throw std::invalid_argument("perturbed_state: unitary dimension mismatch");
  return perturbed_state_from_unitary(eps, d, u.matrix);
}

DensityMatrix perturbed_state(double eps, int d, RngStream& rng) {
  check_perturbed_args(eps, d);
  return perturbed_state_from_unitary(eps, d, haar_unitary(d, rng).matrix);
}

GammaProjectors gamma_projectors(int d, int r) {
  if (r < 1 || r >= d) throw std::invalid_argument("gamma_projectors: need 1 <= r < d");
  CMat g1 = basis_projector_matrix(d, d - r);
  CMat g0 = CMat::Identity(d, d) - g1;
  return {Projector(std::move(g0), r, Validate::no), Projector(std::move(g1), d - r, Validate::no)};
}

CVec rank_r_pure_component(double nu, int i, int d) {
  if (!(nu >= 0.0 && nu <= 1.0)) throw std::invalid_argument("rank_r_pure_component: nu out of [0,1]");
  if (i < 1 || 3 * i > d) throw std::invalid_argument("rank_r_pure_component: index out of range (need 1 <= i <= d/3)");
  CVec psi = CVec::Zero(d);
  psi(d - i) = std::sqrt(1.0 - nu);  // |d+1-i> in 1-based labels
  psi(i - 1) = std::sqrt(nu);       // |i>
  return psi;
}

RankREnsembleParams::RankREnsembleParams(double nu_, int r_, int d_, CMat u_block_)
    : nu(nu_), r(r_), d(d_), u_block(std::move(u_block_)) {
  if (d < 3) throw std::invalid_argument("RankREnsembleParams: need d >= 3");
  if (r < 1 || 3 * r > d) throw std::invalid_argument("RankREnsembleParams: need 1 <= r <= d/3");
  if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("RankREnsembleParams: nu must be in (0,1)");
  if (u_block.rows() != d - r || u_block.cols() != d - r)
    throw std::invalid_argument("RankREnsembleParams: block must be (d-r) x (d-r)");
  if (!is_unitary(u_block, 1e-8)) throw std::invalid_argument("RankREnsembleParams: block not unitary");
}

CMat embed_block_unitary(const CMat& u_block, int d) {
  const int k = static_cast<int>(u_block.rows());
  if (u_block.cols() != k || k > d) throw std::invalid_argument("embed_block_unitary: bad block");
  CMat u = CMat::Identity(d, d);
  u.topLeftCorner(k, k) = u_block;
  return u;
}

namespace {

DensityMatrix rank_r_state_from_block(double nu, int r, int d, const CMat& u_block) {
  const CMat u = embed_block_unitary(u_block, d);
  CMat m = CMat::Zero(d, d);
  for (int i = 1; i <= r; ++i) {
    const CVec psi = u * rank_r_pure_component(nu, i, d);
    m += psi * psi.adjoint();
  }
  m /= double(r);
  return DensityMatrix(std::move(m), Validate::no);
}

}  // namespace

DensityMatrix rank_r_state(const RankREnsembleParams& p) {
  return rank_r_state_from_block(p.nu, p.r, p.d, p.u_block);
}

DensityMatrix rank_r_state(double nu, int r, int d, const HaarUnitary& u_block) {
  if (u_block.dim != d - r) throw std::invalid_argument("rank_r_state: block dimension mismatch");
  if (d < 3 || r < 1 || 3 * r > d) throw std::invalid_argument("rank_r_state: need d >= 3 and 1 <= r <= d/3");
  if (!(nu > 0.0 && nu < 1.0)) throw std::invalid_argument("rank_r_state: nu must be in (0,1)");
  return rank_r_state_from_block(nu, r, d, u_block.matrix);
}

DensityMatrix random_density_matrix(int d, RngStream& rng) {
  const CMat g = ginibre(d, rng);
  CMat m = g * g.adjoint();
  m /= m.trace().real();
  m = (m + m.adjoint()) / 2.0;
  return DensityMatrix(std::move(m), Validate::no);
}

}  // namespace tomolab
