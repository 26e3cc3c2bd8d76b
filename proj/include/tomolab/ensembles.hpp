#pragma once

#include "tomolab/linalg.hpp"
#include "tomolab/rng.hpp"

namespace tomolab {

/// Parameters of the perturbed-mixed-state family
/// rho_{eps,U} = (2 eps / d) U Q_{d/2} U^dag + (1 - eps) 1/d.
struct PerturbedEnsembleParams {
  double eps;
  int d;
  CMat u;

  PerturbedEnsembleParams(double eps_, int d_, CMat u_);
};

/// Spectrum is {(1+eps)/d with multiplicity d/2, (1-eps)/d with multiplicity d/2},
/// so the trace distance to the maximally mixed state is exactly eps.
DensityMatrix perturbed_state(const PerturbedEnsembleParams& p);

/// Overload for an already-validated unitary; skips the unitarity re-check.
DensityMatrix perturbed_state(double eps, int d, const HaarUnitary& u);

/// Convenience overload drawing U fresh from the Haar measure.
DensityMatrix perturbed_state(double eps, int d, RngStream& rng);

struct GammaProjectors {
  Projector gamma0;  // rank r, last r coordinates
  Projector gamma1;  // rank d-r, first d-r coordinates
};
GammaProjectors gamma_projectors(int d, int r);

/// sqrt(1-nu)|d+1-i> + sqrt(nu)|i> with 1-based index i in [1, r].
CVec rank_r_pure_component(double nu, int i, int d);

/// Parameters of the rank-r family sigma_{nu,U}. The unitary acts on the
/// (d-r)-dimensional block spanned by the first d-r coordinates (matching
/// Gamma_1) and is the identity on the rest.
struct RankREnsembleParams {
  double nu;
  int r;
  int d;
  CMat u_block;  // (d-r) x (d-r)

  RankREnsembleParams(double nu_, int r_, int d_, CMat u_block_);
};

/// Embed a (d-r)-dimensional unitary as a direct sum with the identity,
/// block placed on the first d-r coordinates.
CMat embed_block_unitary(const CMat& u_block, int d);

DensityMatrix rank_r_state(const RankREnsembleParams& p);

/// Overload for an already-validated block unitary on C^{d-r}.
DensityMatrix rank_r_state(double nu, int r, int d, const HaarUnitary& u_block);

/// Hilbert-Schmidt-distributed random full-rank state G G^dag / Tr(G G^dag).
DensityMatrix random_density_matrix(int d, RngStream& rng);

}  // namespace tomolab
