#include "tomolab/infotheory.hpp"

#include <cmath>
#include <limits>

namespace tomolab {

namespace {
constexpr double kLn2 = 0.6931471805599453;
constexpr double kPackingRate = 1.0 / 32.0;  // exponent rate of the trace packing, ln N = d^2/32

double log2_safe(double x) { return std::log2(x); }
}  // namespace

void require_pmf(const RVec& p, double tau) {
  if (p.size() == 0) throw std::invalid_argument("pmf: empty");
  if (p.minCoeff() < -1e-12) throw std::invalid_argument("pmf: negative entry");
  if (std::abs(p.sum() - 1.0) > tau) throw std::invalid_argument("pmf: does not sum to 1");
}

double entropy(const RVec& p) {
  require_pmf(p);
  double h = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i)
    if (p(i) > 0.0) h -= p(i) * log2_safe(p(i));
  return h;
}

double kl_divergence(const RVec& p, const RVec& q) {
  if (p.size() != q.size()) throw std::invalid_argument("kl_divergence: size mismatch");
  require_pmf(p);
  require_pmf(q);
  double kl = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (p(i) <= 0.0) continue;
    if (q(i) <= 0.0) return std::numeric_limits<double>::infinity();
    kl += p(i) * log2_safe(p(i) / q(i));
  }
  return std::max(kl, 0.0);
}

double chi2_divergence(const RVec& p, const RVec& q) {
  if (p.size() != q.size()) throw std::invalid_argument("chi2_divergence: size mismatch");
  require_pmf(p);
  require_pmf(q);
  double chi2 = 0.0;
  for (Eigen::Index i = 0; i < p.size(); ++i) {
    if (q(i) <= 0.0) {
      if (p(i) > 1e-12) throw std::invalid_argument("chi2_divergence: support violation");
      continue;
    }
    const double dev = p(i) / q(i) - 1.0;
    chi2 += q(i) * dev * dev;
  }
  return chi2;
}

JointPmf::JointPmf(RMat t) : table(std::move(t)) {
  if (table.size() == 0) throw std::invalid_argument("JointPmf: empty");
  if (table.minCoeff() < -1e-12) throw std::invalid_argument("JointPmf: negative entry");
  if (std::abs(table.sum() - 1.0) > 1e-9) throw std::invalid_argument("JointPmf: does not sum to 1");
}

double mutual_information(const JointPmf& j) {
  const RVec px = j.marginal_x();
  const RVec py = j.marginal_y();
  double h_joint = 0.0;
  for (Eigen::Index x = 0; x < j.table.rows(); ++x)
    for (Eigen::Index y = 0; y < j.table.cols(); ++y)
      if (j.table(x, y) > 0.0) h_joint -= j.table(x, y) * log2_safe(j.table(x, y));
  double hx = 0.0, hy = 0.0;
  for (Eigen::Index x = 0; x < px.size(); ++x)
    if (px(x) > 0.0) hx -= px(x) * log2_safe(px(x));
  for (Eigen::Index y = 0; y < py.size(); ++y)
    if (py(y) > 0.0) hy -= py(y) * log2_safe(py(y));
  return std::max(hx + hy - h_joint, 0.0);
}

double mi_chi2_upper_bound(const JointPmf& j, const RVec& q) {
  if (q.size() != j.table.cols()) throw std::invalid_argument("mi_chi2_upper_bound: reference size mismatch");
  require_pmf(q);
  const RVec px = j.marginal_x();
  double bound = 0.0;
  for (Eigen::Index x = 0; x < j.table.rows(); ++x) {
    if (px(x) <= 0.0) continue;
    const RVec cond = j.table.row(x).transpose() / px(x);
    bound += px(x) * chi2_divergence(cond, q);
  }
  return bound / kLn2;
}

namespace {

double f_chi2_impl(double eps, int d, const Povm& m, const CMat& u) {
  const DensityMatrix rho = perturbed_state(eps, d, HaarUnitary(d, u, Validate::no));
  const OutcomePmf p = outcome_distribution(m, rho);
  double chi2 = 0.0;
  for (int z = 0; z < m.size(); ++z) {
    const double w = m.element(z).trace().real() / d;
    const double pz = p.probs(z);
    if (w <= 0.0) {
      if (pz > 1e-12) throw std::runtime_error("f_chi2: outcome with zero Haar weight but positive probability");
      continue;
    }
    const double dev = pz - w;
    chi2 += dev * dev / w;
  }
  return chi2;
}

}  // namespace

double f_chi2(double eps, int d, const Povm& m, const HaarUnitary& u) {
  if (u.dim != d || m.dim() != d) throw std::invalid_argument("f_chi2: dimension mismatch");
  return f_chi2_impl(eps, d, m, u.matrix);
}

double f_chi2(double eps, int d, const Povm& m, const CMat& u) {
  return f_chi2(eps, d, m, HaarUnitary(d, u));
}

double expected_chi2_bound(double eps, int d, int ell) {
  if (d < 2) throw std::invalid_argument("expected_chi2_bound: d must be >= 2");
  if (ell < 1) throw std::invalid_argument("expected_chi2_bound: ell must be >= 1");
  if (eps <= 0.0) throw std::invalid_argument("expected_chi2_bound: eps must be positive");
  return eps * eps / (d + 1.0) * std::min(1.0, double(ell) / (d - 1.0));
}

namespace {

void require_measurement_operator(const CMat& m, int d) {
  if (m.rows() != d || m.cols() != d) throw std::invalid_argument("measurement operator: dimension mismatch");
  const RVec evals = hermitian_eigs((m + m.adjoint()) / 2.0).values;
  if (evals.minCoeff() < -1e-9 || evals.maxCoeff() > 1.0 + 1e-9)
    throw std::invalid_argument("measurement operator: not between 0 and identity");
}

}  // namespace

double second_moment_bound(const CMat& m_element, double eps, int d) {
  require_measurement_operator(m_element, d);
  const double w = m_element.trace().real() / d;
  if (w <= 0.0) return 0.0;
  return w * w * (1.0 + eps * eps / (d + 1.0) * std::min(1.0, 1.0 / (w * (d - 1.0))));
}

double second_moment_exact(const CMat& m_element, double eps, int d) {
  require_measurement_operator(m_element, d);
  const double w = m_element.trace().real() / d;
  const double tr_m2 = (m_element * m_element).trace().real();
  return w * w + eps * eps * (tr_m2 - d * w * w) / (d * (double(d) * d - 1.0));
}

double rank_r_first_moment(const CMat& m_element, double nu, int r, int d) {
  if (d < 3 || r < 1 || 3 * r > d) throw std::invalid_argument("rank_r_first_moment: need d >= 3, 1 <= r <= d/3");
  if (!(nu >= 0.0 && nu <= 1.0)) throw std::invalid_argument("rank_r_first_moment: nu out of range");
  require_measurement_operator(m_element, d);
  const GammaProjectors g = gamma_projectors(d, r);
  const double tr_m_g0 = (m_element * g.gamma0.matrix()).trace().real();
  const double tr_m_g1 = (m_element * g.gamma1.matrix()).trace().real();
  return (1.0 - nu) / r * tr_m_g0 + nu / (d - r) * tr_m_g1;
}

double rank_r_second_moment_bound(const CMat& m_element, double nu, int r, int d) {
  const double w = rank_r_first_moment(m_element, nu, r, d);
  const GammaProjectors g = gamma_projectors(d, r);
  const CMat mg1 = m_element * g.gamma1.matrix();
  const CMat mg0 = m_element * g.gamma0.matrix();
  const double tr_mg1 = mg1.trace().real();
  const double tr_mg1_sq = (mg1 * mg1).trace().real();
  const double tr_mg1_mg0 = (mg1 * mg0).trace().real();
  const double dr = double(d) - r;
  return w * w + 2.0 * nu * nu / (dr * dr * dr * dr) * tr_mg1 * tr_mg1 +
         3.0 * nu * nu / (r * dr * dr) * tr_mg1_sq + 2.0 * nu * (1.0 - nu) / (double(r) * r * dr) * tr_mg1_mg0;
}

CMat haar_first_moment_exact(const Projector& q) {
  const int d = q.dim();
  return (double(q.rank()) / d) * CMat::Identity(d, d);
}

CMat haar_second_moment_exact(const Projector& p1, const Projector& p2) {
  if (p1.dim() != p2.dim()) throw std::invalid_argument("haar_second_moment_exact: dimension mismatch");
  const int d = p1.dim();
  const double scale = std::max(1.0, p1.matrix().norm());
  if ((p2.matrix() * p1.matrix() - p1.matrix()).norm() > 1e-8 * scale)
    throw std::invalid_argument("haar_second_moment_exact: image containment violated");
  const double r1 = p1.rank(), r2 = p2.rank();
  const double denom = d * (double(d) * d - 1.0);
  const Eigen::Index dd = Eigen::Index(d) * d;
  return (r1 / denom) * ((r2 * d - 1.0) * CMat::Identity(dd, dd) + (d - r2) * swap_operator(d));
}

CMat haar_ketbra_moment_exact(int d, int i, int j) {
  if (i < 0 || j < 0 || i >= d || j >= d) throw std::invalid_argument("haar_ketbra_moment_exact: index out of range");
  if (i == j) return CMat::Identity(d, d) / double(d);
  return CMat::Zero(d, d);
}

double fano_required_mi(long n_states, double p_error) {
  if (n_states < 2) throw std::invalid_argument("fano_required_mi: need at least 2 states");
  if (p_error < 0.0 || p_error >= 1.0) throw std::invalid_argument("fano_required_mi: p_error out of [0,1)");
  return (1.0 - p_error) * log2_safe(double(n_states)) - 1.0;
}

double chi2_tail_alpha(double eps, int d) { return Chi2TailParams::c * eps * eps / d; }

double chi2_tail_alpha(double eps, int d, int ell) { return 4.0 * ell * eps * eps / (3.0 * double(d) * d); }

double chi2_tail_probability(double eps, int d, double t) {
  return std::exp(-Chi2TailParams::C * double(d) * d * t / (eps * eps));
}

double chi2_packing_threshold(double eps, int d, int n_measurements, std::optional<int> ell) {
  if (n_measurements < 1) throw std::invalid_argument("chi2_packing_threshold: need m >= 1");
  const double alpha = ell ? chi2_tail_alpha(eps, d, *ell) : chi2_tail_alpha(eps, d);
  return alpha + eps * eps * std::log(3.0 * n_measurements) / (Chi2TailParams::C * double(d) * d);
}

LowerBoundResult sample_lower_bound(const LowerBoundQuery& q) {
  if (q.d < 2) throw std::invalid_argument("sample_lower_bound: d must be >= 2");
  if (q.eps <= 0.0 || q.eps >= 1.0) throw std::invalid_argument("sample_lower_bound: eps must be in (0,1)");
  if (q.p_error < 0.0 || q.p_error >= 1.0) throw std::invalid_argument("sample_lower_bound: p_error out of [0,1)");

  using Family = LowerBoundQuery::Family;
  const double eps2 = q.eps * q.eps;

  double required_nats = 0.0;
  double per_sample_nats = 0.0;
  std::string regime, scaling;

  switch (q.family) {
    case Family::full_rank: {
      required_nats = (1.0 - q.p_error) * kPackingRate * q.d * q.d - kLn2;
      if (q.log_m) {
        const double alpha = q.ell ? chi2_tail_alpha(q.eps, q.d, *q.ell) : chi2_tail_alpha(q.eps, q.d);
        per_sample_nats = alpha + eps2 * (std::log(3.0) + *q.log_m) / (Chi2TailParams::C * double(q.d) * q.d);
        regime = q.ell ? "tomography, adaptive over a fixed measurement set, bounded outcomes"
                       : "tomography, adaptive over a fixed measurement set";
        scaling = q.ell ? "d^4/((ell + log m) eps^2)" : "d^3/((1 + log(m)/d) eps^2)";
      } else {
        per_sample_nats = q.ell ? expected_chi2_bound(q.eps, q.d, *q.ell) : eps2 / (q.d + 1.0);
        regime = q.ell ? "tomography, nonadaptive, bounded outcomes" : "tomography, nonadaptive, arbitrary outcomes";
        scaling = q.ell ? "d^4/(ell eps^2)" : "d^3/eps^2";
      }
      break;
    }
    case Family::rank_r: {
      if (q.r < 1 || 3 * q.r > q.d) throw std::invalid_argument("sample_lower_bound: need 1 <= r <= d/3");
      if (q.eps >= 1.0 / 8.0)
        throw std::invalid_argument("sample_lower_bound: rank-r bound needs eps < 1/8 (nu = 64 eps^2 < 1)");
      if (q.log_m) throw std::invalid_argument("sample_lower_bound: rank-r family has no fixed-set variant");
      const double nu = 64.0 * eps2;
      required_nats = (1.0 - q.p_error) * kPackingRate * q.r * q.d - kLn2;
      if (q.ell) {
        per_sample_nats = 4.0 * nu * *q.ell / (double(q.r) * (q.d - q.r));
        regime = "rank-r tomography, nonadaptive, bounded outcomes";
        scaling = "r^2 d^2/(ell eps^2)";
      } else {
        per_sample_nats = 4.0 * nu / q.r;
        regime = "rank-r tomography, nonadaptive, arbitrary outcomes";
        scaling = "r^2 d/eps^2";
      }
      break;
    }
    case Family::shadow: {
      if (q.log_M_observables <= 0.0)
        throw std::invalid_argument("sample_lower_bound: shadow family needs log_M_observables > 0");
      const double log_m_capped = std::min(q.log_M_observables, kPackingRate * q.d * q.d);
      required_nats = (1.0 - q.p_error) * log_m_capped - kLn2;
      const double log_m = q.log_m.value_or(0.0);
      per_sample_nats =
          chi2_tail_alpha(q.eps, q.d) + eps2 * (std::log(3.0) + log_m) / (Chi2TailParams::C * double(q.d) * q.d);
      regime = "shadow estimation, fixed measurement set";
      scaling = "d min{d^2, log M}/eps^2";
      break;
    }
  }

  LowerBoundResult out;
  out.required_info_bits = std::max(required_nats, 0.0) / kLn2;
  out.per_sample_bits = per_sample_nats / kLn2;
  out.samples = per_sample_nats > 0.0 ? std::max(required_nats, 0.0) / per_sample_nats : 0.0;
  out.regime = std::move(regime);
  out.scaling = std::move(scaling);
  return out;
}

}  // namespace tomolab
