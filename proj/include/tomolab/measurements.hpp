#pragma once

#include "tomolab/linalg.hpp"
#include "tomolab/rng.hpp"

#include <functional>
#include <vector>

namespace tomolab {

/// Finite-outcome POVM: PSD elements summing to the identity. Outcomes are
/// indices [0, size); semantic outcome values (e.g. +-1 for binary Pauli
/// measurements) are carried by the estimator layer.
class Povm {
 public:
  explicit Povm(std::vector<CMat> elements, Validate v = Validate::yes);

  int dim() const { return dim_; }
  /// Number of outcomes (the measurement's rank).
  int size() const { return static_cast<int>(elements_.size()); }
  const CMat& element(int z) const { return elements_.at(z); }
  const std::vector<CMat>& elements() const { return elements_; }

 private:
  std::vector<CMat> elements_;
  int dim_;
};

struct OutcomePmf {
  RVec probs;
};

/// probs[z] = Tr(M_z rho), clamped at zero (clamp magnitude asserted tiny)
/// and renormalized. Throws if the probabilities miss unit total by more
/// than tolerance.
OutcomePmf outcome_distribution(const Povm& m, const DensityMatrix& rho);

/// Draw one outcome index; discarding semantics (no post-measurement state).
int sample_outcome(const Povm& m, const DensityMatrix& rho, RngStream& rng);
int sample_outcome(const OutcomePmf& pmf, RngStream& rng);

/// Rank-one basis measurement {U|j><j|U^dag}.
Povm rotated_basis_povm(const HaarUnitary& u);

/// All 4^q q-qubit Pauli matrices (tensor products of {1, sx, sy, sz}),
/// identity first. Pairwise orthogonal: Tr(P_i P_j) = d delta_ij.
std::vector<CMat> pauli_operators(int q);

/// Two-outcome measurement {(1+P)/2, (1-P)/2} for a Hermitian involution P.
/// Outcome 0 carries value +1, outcome 1 value -1.
Povm binary_pauli_povm(const CMat& p);

/// ell-outcome POVM from normalized Ginibre squares:
/// {S^{-1/2} G_z G_z^dag S^{-1/2}} with S the sum of the G_z G_z^dag.
Povm random_povm(int d, int ell, RngStream& rng);

/// Adaptive measurement contract: a map from the outcome history to the next
/// measurement to perform.
using AdaptiveStrategy = std::function<Povm(const std::vector<int>& history)>;

/// Run n adaptive single-copy measurements on fresh copies of rho.
std::vector<int> simulate_adaptive(const DensityMatrix& rho, const AdaptiveStrategy& strategy, int n,
                                   RngStream& rng);

}  // namespace tomolab
