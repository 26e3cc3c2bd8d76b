#pragma once

#include "tomolab/ensembles.hpp"
#include "tomolab/infotheory.hpp"
#include "tomolab/measurements.hpp"

#include <string>
#include <vector>

namespace tomolab {

/// Tr(P U Q U^dag): overlap of one projector with a rotated second one.
double projector_overlap(const Projector& p, const HaarUnitary& u, const Projector& q);

struct OverlapTails {
  double lower_freq;  // fraction with overlap <= (1-t) r1 r2 / d
  double upper_freq;  // fraction with overlap >= (1+t) r1 r2 / d
  double lower_bound;  // exp(-r1 r2 t^2 / 2)
  double upper_bound;  // exp(-r1 r2 t^2 / 4)
  long trials;
};
OverlapTails overlap_tail_empirical(int d, int r1, int r2, double t, long trials, RngStream& rng);

struct ConstraintStats {
  std::string name;
  long rejections = 0;
};

/// Output of a rejection-sampling packing construction. Exhausting the draw
/// budget is a reported outcome, not an error; `complete` records whether the
/// target size was reached. Constraints that never rejected are flagged so a
/// "satisfied" verdict can be told apart from a vacuous one.
struct PackingResult {
  int d = 0;
  double separation = 0;  // the enforced pairwise threshold
  std::vector<CMat> unitaries;
  long n_draws = 0;
  long n_rejected = 0;
  bool complete = false;
  std::vector<ConstraintStats> constraints;

  std::vector<std::string> vacuous_constraints() const;
};

inline constexpr long kDrawBudgetPerTarget = 10000;

/// Greedy rejection sampling of perturbed states rho_{eps,U}: accept a draw
/// when its trace distance to every accepted state exceeds eps/2.
PackingResult build_trace_packing(int d, double eps, int n_target, long max_draws, RngStream& rng);

/// As build_trace_packing, additionally requiring f_chi2(eps, d, M_i, U) <= tau
/// for every provided measurement.
PackingResult build_chi2_constrained_packing(int d, double eps, int n_target, const std::vector<Povm>& povms,
                                             double tau, long max_draws, RngStream& rng);

/// Rejection sampling enforcing pairwise rotated-projector overlap
/// Tr(U_i Q U_i^dag U_j Q U_j^dag) <= d/3 with Q of rank d/2.
PackingResult build_shadow_packing(int d, int n_target, long max_draws, RngStream& rng);

/// Rejection sampling of embedded block unitaries enforcing pairwise
/// || sigma_{nu,U} - sigma_{nu,V} ||_1 > sqrt(nu)/4.
PackingResult build_rank_r_packing(int d, int r, double nu, int n_target, long max_draws, RngStream& rng);

/// Exhaustive O(N^2) re-verification of a packing's declared constraint.
struct PackingCheck {
  bool ok = false;
  double worst = 0;  // the extremal pairwise value observed
  long n_pairs = 0;
};

PackingCheck verify_trace_packing(const PackingResult& r, double eps);
PackingCheck verify_chi2_packing(const PackingResult& r, double eps, const std::vector<Povm>& povms, double tau);
PackingCheck verify_shadow_packing(const PackingResult& r);
PackingCheck verify_rank_r_packing(const PackingResult& r, int rank, double nu);

}  // namespace tomolab
