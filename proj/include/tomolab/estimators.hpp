#pragma once

#include "tomolab/measurements.hpp"
#include "tomolab/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace tomolab {

/// Measurement oracle: returns one fresh single-copy outcome for the chosen
/// measurement. The same estimators run against simulated states today and
/// external backends later.
using StateOracle = std::function<int(const Povm&, RngStream&)>;

StateOracle simulated_state_oracle(DensityMatrix rho);

/// (d+1) U|j><j|U^dag - 1. Eigenvalues are {d, -1 x (d-1)}; unit trace.
CMat single_shot_estimator(const HaarUnitary& u, int j);

/// One random-basis measurement record. The unitary is reproducible from the
/// sketch's base key and the record's path index.
struct ShadowRecord {
  std::uint64_t path_index;
  CMat unitary;
  int outcome;
};

struct ShadowSketch {
  int d = 0;
  std::uint64_t base_key = 0;
  std::vector<ShadowRecord> records;

  long size() const { return static_cast<long>(records.size()); }
};

/// n independent Haar rotated-basis measurements on fresh copies.
ShadowSketch collect_shadow(const StateOracle& source, int d, long n, RngStream& rng);

/// Mean of the single-shot estimators over a sketch.
CMat shadow_mean_estimate(const ShadowSketch& sketch);

/// Raw estimates are Hermitian and unit trace but possibly non-PSD; every
/// risk identity is stated for the raw estimator. PSD projection is opt-in
/// reporting.
struct TomographyEstimate {
  CMat raw;
  std::optional<DensityMatrix> projected;
  long n_used = 0;
};

/// Mean of n single-shot estimators from rotated-basis measurements.
/// E || raw - rho ||_F^2 = (d^2 + d - 1 - Tr rho^2) / n exactly.
TomographyEstimate random_basis_tomography(const StateOracle& source, int d, long n, RngStream& rng);

/// Binary Pauli tomography on q qubits: s measurements of each non-identity
/// Pauli; the identity coefficient is fixed at 1 by the trace constraint.
/// Uses s (d^2 - 1) samples; E || raw - rho ||_F^2 <= d/s.
TomographyEstimate pauli_tomography(const StateOracle& source, int q, long s, RngStream& rng);

/// Sample-mean estimates of Tr(O_i rho) from a sketch, for observables with
/// 0 <= O_i <= 1.
RVec shadow_sample_mean(const ShadowSketch& sketch, const std::vector<CMat>& observables);

/// Median over k_groups group-means per observable. k_groups = 1 reduces to
/// the sample mean; records beyond the largest multiple of k_groups are
/// dropped.
RVec shadow_median_of_means(const ShadowSketch& sketch, const std::vector<CMat>& observables, int k_groups);

/// Direct two-outcome strategy: measure {O_i, 1 - O_i} repeatedly and return
/// the empirical frequencies. Uses ceil(3 ln(3M) / eps^2) samples per
/// observable.
RVec two_outcome_shadow_tomography(const StateOracle& source, const std::vector<CMat>& observables, double eps,
                                   RngStream& rng);
long two_outcome_samples_per_observable(int n_observables, double eps);

/// Smallest n with 2 exp(-(n eps)^2/2 / (n sigma2 + K n eps / 3)) <= delta,
/// i.e. n >= 2 (sigma2 + K eps/3) ln(2/delta) / eps^2.
long bernstein_sample_plan(double eps, double delta, double sigma2, double k_bound);

/// Shadow sample plan n = ceil(12 d ln(M) / eps^2). The constant 12 was
/// fixed by a calibration run against the d = 8, M = 50 instance and is kept
/// frozen here.
long shadow_sample_plan(int d, int n_observables, double eps);

}  // namespace tomolab
