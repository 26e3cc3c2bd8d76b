#pragma once

#include "tomolab/ensembles.hpp"
#include "tomolab/linalg.hpp"
#include "tomolab/measurements.hpp"

#include <optional>
#include <string>

namespace tomolab {

/// Entropies and divergences are in bits (log base 2) throughout.

/// Validate a discrete distribution: nonnegative entries summing to 1.
void require_pmf(const RVec& p, double tau = 1e-9);

double entropy(const RVec& p);

/// Sum p log2(p/q) with 0 log 0 = 0; +infinity when supp(p) is not
/// contained in supp(q).
double kl_divergence(const RVec& p, const RVec& q);

/// Sum_x q(x) (p(x)/q(x) - 1)^2. Requires supp(p) within supp(q);
/// entries with p = q = 0 contribute 0.
double chi2_divergence(const RVec& p, const RVec& q);

/// Joint distribution of a pair of discrete variables; rows index x,
/// columns index y.
struct JointPmf {
  RMat table;

  explicit JointPmf(RMat t);
  RVec marginal_x() const { return table.rowwise().sum(); }
  RVec marginal_y() const { return table.colwise().sum(); }
};

/// I(x:y) in bits, via H(x) + H(y) - H(x,y).
double mutual_information(const JointPmf& j);

/// (1 / ln 2) E_x D_chi2(p_{y|x} || q); an upper bound on I(x:y) for any
/// reference distribution q on y.
double mi_chi2_upper_bound(const JointPmf& j, const RVec& q);

/// chi^2 divergence of the outcome distribution of measuring the perturbed
/// state rho_{eps,U} from the exact Haar-averaged outcome distribution
/// w(z) = Tr(M_z)/d. Always in [0, eps^2].
double f_chi2(double eps, int d, const Povm& m, const HaarUnitary& u);
double f_chi2(double eps, int d, const Povm& m, const CMat& u);

/// eps^2/(d+1) * min{1, ell/(d-1)}: the bound on the Haar average of f_chi2
/// for any measurement with ell outcomes. Pass ell >= d-1 (or huge) for the
/// unbounded-outcome case.
double expected_chi2_bound(double eps, int d, int ell);

/// w = Tr(M)/d for 0 <= M <= 1. First Haar moment of Tr(M rho_{eps,U}) is
/// exactly w; the second moment is bounded by
/// w^2 (1 + eps^2/(d+1) * min{1, 1/(w(d-1))}).
double second_moment_bound(const CMat& m_element, double eps, int d);

/// Exact second Haar moment of Tr(M rho_{eps,U}):
/// w^2 + eps^2 (Tr(M^2) - d w^2) / (d (d^2 - 1)).
double second_moment_exact(const CMat& m_element, double eps, int d);

/// Exact first Haar moment of Tr(M sigma_{nu,U}) for the rank-r family:
/// (1-nu)/r Tr(M Gamma_0) + nu/(d-r) Tr(M Gamma_1).
double rank_r_first_moment(const CMat& m_element, double nu, int r, int d);

/// Four-term upper bound on the second Haar moment of Tr(M sigma_{nu,U}).
double rank_r_second_moment_bound(const CMat& m_element, double nu, int r, int d);

/// E U Q U^dag = (r/d) 1 for a rank-r projector Q.
CMat haar_first_moment_exact(const Projector& q);

/// E U^{(x)2} (Pi1 (x) Pi2) (U^dag)^{(x)2}
///   = r1 / (d (d^2-1)) [ (r2 d - 1) 1 + (d - r2) W ]
/// for projectors with im(Pi1) contained in im(Pi2).
CMat haar_second_moment_exact(const Projector& p1, const Projector& p2);

/// E U |i><j| U^dag = delta_ij 1/d.
CMat haar_ketbra_moment_exact(int d, int i, int j);

/// (1 - p_e) log2(N) - 1: the mutual information needed to decode one of N
/// equally likely messages with error probability at most p_e.
double fano_required_mi(long n_states, double p_error);

/// Universal constants of the chi^2 tail bound
/// Pr[F > alpha + t] <= exp(-C d^2 t / eps^2).
struct Chi2TailParams {
  static constexpr double c = 2.0;
  static constexpr double C = 1.0 / 768.0;  // 1/(3*2^8)
  double alpha = 0.0;
  double t = 0.0;
};

/// alpha = c eps^2 / d (arbitrary outcomes) or 4 ell eps^2 / (3 d^2).
double chi2_tail_alpha(double eps, int d);
double chi2_tail_alpha(double eps, int d, int ell);
/// exp(-C d^2 t / eps^2).
double chi2_tail_probability(double eps, int d, double t);
/// alpha + eps^2 ln(3m) / (C d^2): the cap satisfied by a 2/3 fraction of
/// Haar draws simultaneously for m measurements.
double chi2_packing_threshold(double eps, int d, int n_measurements, std::optional<int> ell = std::nullopt);

/// Sample-complexity lower-bound calculator. Combines the packing rate, the
/// Fano requirement, and the per-sample information cap for the requested
/// measurement regime, with all constants explicit.
struct LowerBoundQuery {
  enum class Family { full_rank, rank_r, shadow };
  Family family = Family::full_rank;
  int d = 2;
  double eps = 0.5;
  std::optional<int> ell;        // max outcomes per measurement; nullopt = unbounded
  std::optional<double> log_m;   // ln(measurement-set size); nullopt = nonadaptive
  int r = 1;                     // state rank (rank_r family)
  double log_M_observables = 0;  // ln(number of observables) (shadow family)
  double p_error = 1.0 / 3.0;
};

struct LowerBoundResult {
  double samples = 0;             // the numeric threshold n*
  double required_info_bits = 0;  // Fano requirement
  double per_sample_bits = 0;     // information cap per measurement
  std::string regime;             // which bound produced it
  std::string scaling;            // asymptotic law, e.g. "d^3/eps^2"
};

LowerBoundResult sample_lower_bound(const LowerBoundQuery& q);

}  // namespace tomolab
