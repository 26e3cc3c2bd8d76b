#include "tomolab/measurements.hpp"

#include <cmath>

namespace tomolab {

Povm::Povm(std::vector<CMat> elements, Validate v) : elements_(std::move(elements)), dim_(0) {
  if (elements_.empty()) throw std::invalid_argument("Povm: no elements");
  dim_ = static_cast<int>(elements_[0].rows());
  for (const CMat& m : elements_)
    if (m.rows() != dim_ || m.cols() != dim_) throw std::invalid_argument("Povm: element dimension mismatch");
  if (v == Validate::no) return;
  CMat sum = CMat::Zero(dim_, dim_);
  for (const CMat& m : elements_) {
    if (!is_hermitian(m, 1e-8)) throw std::invalid_argument("Povm: element not Hermitian");
    if (hermitian_eigs(m).values.minCoeff() < -tol::psd)
      throw std::invalid_argument("Povm: element not positive semidefinite");
    sum += m;
  }
  if ((sum - CMat::Identity(dim_, dim_)).norm() > tol::povm_completeness)
    throw std::invalid_argument("Povm: elements do not sum to identity");
}

OutcomePmf outcome_distribution(const Povm& m, const DensityMatrix& rho) {
  if (m.dim() != rho.dim()) throw std::invalid_argument("outcome_distribution: dimension mismatch");
  RVec probs(m.size());
  for (int z = 0; z < m.size(); ++z) probs(z) = (m.element(z) * rho.matrix()).trace().real();
  const double clamp = -probs.minCoeff();
  if (clamp > 1e-10) throw std::runtime_error("outcome_distribution: negative probability beyond noise floor");
  probs = probs.cwiseMax(0.0);
  const double total = probs.sum();
  if (std::abs(total - 1.0) > 1e-9) throw std::runtime_error("outcome_distribution: probabilities do not sum to 1");
  probs /= total;
  return {std::move(probs)};
}

int sample_outcome(const OutcomePmf& pmf, RngStream& rng) {
  const double u = rng.uniform();
  double acc = 0.0;
  const int n = static_cast<int>(pmf.probs.size());
  for (int z = 0; z < n; ++z) {
    acc += pmf.probs(z);
    if (u < acc) return z;
  }
  return n - 1;
}

int sample_outcome(const Povm& m, const DensityMatrix& rho, RngStream& rng) {
  return sample_outcome(outcome_distribution(m, rho), rng);
}

Povm rotated_basis_povm(const HaarUnitary& u) {
  const int d = u.dim;
  std::vector<CMat> elems;
  elems.reserve(d);
  for (int j = 0; j < d; ++j) {
    const CVec col = u.matrix.col(j);
    elems.push_back(col * col.adjoint());
  }
  // Completeness is exact for a basis; skip the per-element eigensolves.
  return Povm(std::move(elems), Validate::no);
}

std::vector<CMat> pauli_operators(int q) {
  if (q < 1) throw std::invalid_argument("pauli_operators: q must be >= 1");
  if (q > 6) throw std::invalid_argument("pauli_operators: q > 6 exceeds the size cap");
  CMat id = CMat::Identity(2, 2);
  CMat sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << 0, Complex(0, -1), Complex(0, 1), 0;
  sz << 1, 0, 0, -1;
  const CMat single[4] = {id, sx, sy, sz};

  const int count = 1 << (2 * q);
  std::vector<CMat> out;
  out.reserve(count);
  for (int idx = 0; idx < count; ++idx) {
    CMat p = CMat::Identity(1, 1);
    // Most significant base-4 digit acts on the first tensor factor.
    for (int k = q - 1; k >= 0; --k) p = kron(p, single[(idx >> (2 * k)) & 3]);
    out.push_back(std::move(p));
  }
  return out;
}

Povm binary_pauli_povm(const CMat& p) {
  const int d = static_cast<int>(p.rows());
  if (p.cols() != d) throw std::invalid_argument("binary_pauli_povm: matrix not square");
  if (!is_hermitian(p, 1e-9)) throw std::invalid_argument("binary_pauli_povm: not Hermitian");
  if ((p * p - CMat::Identity(d, d)).norm() > 1e-9 * std::sqrt(double(d)))
    throw std::invalid_argument("binary_pauli_povm: not an involution");
  const CMat id = CMat::Identity(d, d);
  return Povm({(id + p) / 2.0, (id - p) / 2.0}, Validate::no);
}

Povm random_povm(int d, int ell, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("random_povm: d must be positive");
  if (ell < 1) throw std::invalid_argument("random_povm: ell must be positive");
  for (int attempt = 0; attempt < 10; ++attempt) {
    std::vector<CMat> raw;
    raw.reserve(ell);
    CMat s = CMat::Zero(d, d);
    for (int z = 0; z < ell; ++z) {
      const CMat g = ginibre(d, rng);
      raw.push_back(g * g.adjoint());
      s += raw.back();
    }
    const HermitianEigs eigs = hermitian_eigs(s);
    if (eigs.values.minCoeff() < 1e-12 * eigs.values.maxCoeff()) continue;  // singular; retry
    const CMat s_inv_sqrt =
        eigs.vectors * eigs.values.cwiseSqrt().cwiseInverse().asDiagonal() * eigs.vectors.adjoint();
    std::vector<CMat> elems;
    elems.reserve(ell);
    for (const CMat& a : raw) {
      CMat m = s_inv_sqrt * a * s_inv_sqrt;
      elems.push_back((m + m.adjoint()) / 2.0);
    }
    return Povm(std::move(elems), Validate::no);
  }
  throw std::runtime_error("random_povm: singular normalization after 10 retries");
}

std::vector<int> simulate_adaptive(const DensityMatrix& rho, const AdaptiveStrategy& strategy, int n,
                                   RngStream& rng) {
  std::vector<int> history;
  history.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Povm m = strategy(history);
    RngStream sub = rng.child(i);
    history.push_back(sample_outcome(m, rho, sub));
  }
  return history;
}

}  // namespace tomolab
