#include "tomolab/estimators.hpp"

#include <algorithm>
#include <cmath>

namespace tomolab {

StateOracle simulated_state_oracle(DensityMatrix rho) {
  return [rho = std::move(rho)](const Povm& m, RngStream& rng) { return sample_outcome(m, rho, rng); };
}

CMat single_shot_estimator(const HaarUnitary& u, int j) {
  const int d = u.dim;
  if (j < 0 || j >= d) throw std::invalid_argument("single_shot_estimator: outcome index out of range");
  const CVec col = u.matrix.col(j);
  return (d + 1.0) * (col * col.adjoint()) - CMat::Identity(d, d);
}

ShadowSketch collect_shadow(const StateOracle& source, int d, long n, RngStream& rng) {
  if (n < 1) throw std::invalid_argument("collect_shadow: n must be >= 1");
  ShadowSketch sketch;
  sketch.d = d;
  sketch.base_key = rng.key();
  sketch.records.reserve(n);
  for (long k = 0; k < n; ++k) {
    RngStream sub = rng.child(k);
    RngStream u_stream = sub.child(0);
    RngStream sample_stream = sub.child(1);
    HaarUnitary u = haar_unitary(d, u_stream);
    const int j = source(rotated_basis_povm(u), sample_stream);
    sketch.records.push_back({static_cast<std::uint64_t>(k), std::move(u.matrix), j});
  }
  return sketch;
}

CMat shadow_mean_estimate(const ShadowSketch& sketch) {
  if (sketch.records.empty()) throw std::invalid_argument("shadow_mean_estimate: empty sketch");
  const int d = sketch.d;
  CMat sum = CMat::Zero(d, d);
  for (const ShadowRecord& rec : sketch.records) {
    const CVec col = rec.unitary.col(rec.outcome);
    sum += col * col.adjoint();
  }
  sum *= (d + 1.0) / double(sketch.records.size());
  sum -= CMat::Identity(d, d);
  return sum;
}

TomographyEstimate random_basis_tomography(const StateOracle& source, int d, long n, RngStream& rng) {
  const ShadowSketch sketch = collect_shadow(source, d, n, rng);
  TomographyEstimate est;
  est.raw = shadow_mean_estimate(sketch);
  est.n_used = n;
  return est;
}

TomographyEstimate pauli_tomography(const StateOracle& source, int q, long s, RngStream& rng) {
  if (s < 1) throw std::invalid_argument("pauli_tomography: s must be >= 1");
  const std::vector<CMat> paulis = pauli_operators(q);
  const int d = 1 << q;
  CMat raw = CMat::Identity(d, d);  // identity coefficient fixed at 1 by the trace constraint
  for (std::size_t i = 1; i < paulis.size(); ++i) {
    const Povm m = binary_pauli_povm(paulis[i]);
    RngStream sub = rng.child(i);
    long plus = 0;
    for (long shot = 0; shot < s; ++shot) {
      RngStream shot_stream = sub.child(shot);
      if (source(m, shot_stream) == 0) ++plus;
    }
    const double mu = (2.0 * plus - s) / double(s);  // mean of +-1 outcomes
    raw += mu * paulis[i];
  }
  TomographyEstimate est;
  est.raw = raw / double(d);
  est.n_used = s * long(paulis.size() - 1);
  return est;
}

namespace {

void require_bounded_observables(const std::vector<CMat>& observables, int d) {
  for (const CMat& o : observables) {
    if (o.rows() != d || o.cols() != d) throw std::invalid_argument("observable: dimension mismatch");
    const RVec evals = hermitian_eigs((o + o.adjoint()) / 2.0).values;
    if (evals.minCoeff() < -1e-9 || evals.maxCoeff() > 1.0 + 1e-9)
      throw std::invalid_argument("observable: not between 0 and identity");
  }
}

}  // namespace

RVec shadow_sample_mean(const ShadowSketch& sketch, const std::vector<CMat>& observables) {
  require_bounded_observables(observables, sketch.d);
  if (sketch.records.empty()) throw std::invalid_argument("shadow_sample_mean: empty sketch");
  const int d = sketch.d;
  RVec out = RVec::Zero(observables.size());
  for (const ShadowRecord& rec : sketch.records) {
    const CVec col = rec.unitary.col(rec.outcome);
    for (std::size_t i = 0; i < observables.size(); ++i) {
      const double val = (col.adjoint() * observables[i] * col).value().real();
      out(i) += (d + 1.0) * val - observables[i].trace().real();
    }
  }
  return out / double(sketch.records.size());
}

RVec shadow_median_of_means(const ShadowSketch& sketch, const std::vector<CMat>& observables, int k_groups) {
  require_bounded_observables(observables, sketch.d);
  const long n = sketch.size();
  if (k_groups < 1 || k_groups > n) throw std::invalid_argument("shadow_median_of_means: bad group count");
  const long per_group = n / k_groups;
  const int d = sketch.d;
  RVec out(observables.size());
  std::vector<double> group_means(k_groups);
  for (std::size_t i = 0; i < observables.size(); ++i) {
    const double tr_o = observables[i].trace().real();
    for (int g = 0; g < k_groups; ++g) {
      double sum = 0.0;
      for (long k = g * per_group; k < (g + 1) * per_group; ++k) {
        const ShadowRecord& rec = sketch.records[k];
        const CVec col = rec.unitary.col(rec.outcome);
        sum += (d + 1.0) * (col.adjoint() * observables[i] * col).value().real() - tr_o;
      }
      group_means[g] = sum / double(per_group);
    }
    std::sort(group_means.begin(), group_means.end());
    out(i) = (k_groups % 2 == 1) ? group_means[k_groups / 2]
                                 : 0.5 * (group_means[k_groups / 2 - 1] + group_means[k_groups / 2]);
  }
  return out;
}

long two_outcome_samples_per_observable(int n_observables, double eps) {
  if (n_observables < 1 || eps <= 0.0) throw std::invalid_argument("two_outcome plan: bad arguments");
  return static_cast<long>(std::ceil(3.0 * std::log(3.0 * n_observables) / (eps * eps)));
}

RVec two_outcome_shadow_tomography(const StateOracle& source, const std::vector<CMat>& observables, double eps,
                                   RngStream& rng) {
  if (observables.empty()) throw std::invalid_argument("two_outcome_shadow_tomography: no observables");
  const int d = static_cast<int>(observables[0].rows());
  require_bounded_observables(observables, d);
  const long shots = two_outcome_samples_per_observable(static_cast<int>(observables.size()), eps);
  const CMat id = CMat::Identity(d, d);
  RVec out(observables.size());
  for (std::size_t i = 0; i < observables.size(); ++i) {
    const Povm m({observables[i], id - observables[i]}, Validate::no);
    RngStream sub = rng.child(i);
    long hits = 0;
    for (long shot = 0; shot < shots; ++shot) {
      RngStream shot_stream = sub.child(shot);
      if (source(m, shot_stream) == 0) ++hits;
    }
    out(i) = double(hits) / double(shots);
  }
  return out;
}

long bernstein_sample_plan(double eps, double delta, double sigma2, double k_bound) {
  if (eps <= 0.0 || delta <= 0.0 || delta >= 1.0 || sigma2 < 0.0 || k_bound < 0.0)
    throw std::invalid_argument("bernstein_sample_plan: bad arguments");
  return static_cast<long>(std::ceil(2.0 * (sigma2 + k_bound * eps / 3.0) * std::log(2.0 / delta) / (eps * eps)));
}

long shadow_sample_plan(int d, int n_observables, double eps) {
  if (d < 2 || n_observables < 2 || eps <= 0.0) throw std::invalid_argument("shadow_sample_plan: bad arguments");
  return static_cast<long>(std::ceil(12.0 * d * std::log(double(n_observables)) / (eps * eps)));
}

}  // namespace tomolab
