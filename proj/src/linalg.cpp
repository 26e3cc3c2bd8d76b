#include "tomolab/linalg.hpp"

#include <cmath>

namespace tomolab {

bool is_finite(const CMat& a) { return a.allFinite(); }

bool is_hermitian(const CMat& a, double tau) {
  if (a.rows() != a.cols()) return false;
  const double scale = std::max(1.0, a.norm());
  return (a - a.adjoint()).norm() <= tau * scale;
}

bool is_unitary(const CMat& a, double tau) {
  if (a.rows() != a.cols()) return false;
  const CMat g = a.adjoint() * a;
  return (g - CMat::Identity(a.rows(), a.cols())).norm() <= tau * std::max(1.0, std::sqrt(double(a.rows())));
}

HermitianEigs hermitian_eigs(const CMat& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eigs: matrix not square");
  Eigen::SelfAdjointEigenSolver<CMat> solver(a);
  if (solver.info() != Eigen::Success) throw std::runtime_error("hermitian_eigs: eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

double frobenius_norm(const CMat& a) { return a.norm(); }

double trace_norm_hermitian(const CMat& a) {
  if (!is_hermitian(a, 1e-8)) throw std::invalid_argument("trace_norm_hermitian: input not Hermitian");
  return hermitian_eigs((a + a.adjoint()) / 2.0).values.cwiseAbs().sum();
}

double spectral_norm(const CMat& a) {
  Eigen::JacobiSVD<CMat> svd(a);
  return svd.singularValues()(0);
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat swap_operator(int d) {
  if (d < 1) throw std::invalid_argument("swap_operator: d must be positive");
  CMat w = CMat::Zero(Eigen::Index(d) * d, Eigen::Index(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) w(j * d + i, i * d + j) = 1.0;
  return w;
}

CMat partial_trace_second(const CMat& ab, int d1, int d2) {
  if (ab.rows() != ab.cols() || ab.rows() != Eigen::Index(d1) * d2)
    throw std::invalid_argument("partial_trace_second: dimension not factorizable as d1*d2");
  CMat out = CMat::Zero(d1, d1);
  for (int i = 0; i < d1; ++i)
    for (int k = 0; k < d1; ++k)
      for (int j = 0; j < d2; ++j) out(i, k) += ab(Eigen::Index(i) * d2 + j, Eigen::Index(k) * d2 + j);
  return out;
}

CMat basis_projector_matrix(int d, int rank) {
  if (rank < 0 || rank > d) throw std::invalid_argument("basis_projector_matrix: rank out of range");
  CMat q = CMat::Zero(d, d);
  for (int i = 0; i < rank; ++i) q(i, i) = 1.0;
  return q;
}

DensityMatrix::DensityMatrix(CMat m, Validate v) : m_(std::move(m)) {
  if (v == Validate::no) return;
  if (m_.rows() != m_.cols() || m_.rows() < 1) throw std::invalid_argument("DensityMatrix: matrix not square");
  if (!is_finite(m_)) throw std::invalid_argument("DensityMatrix: non-finite entries");
  if (!is_hermitian(m_, tol::hermitian)) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(m_.trace().real() - 1.0) > tol::trace || std::abs(m_.trace().imag()) > tol::trace)
    throw std::invalid_argument("DensityMatrix: trace != 1");
  const RVec evals = hermitian_eigs(m_).values;
  if (evals.minCoeff() < -tol::psd) throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::maximally_mixed(int d) {
  return DensityMatrix(CMat::Identity(d, d) / double(d), Validate::no);
}

DensityMatrix DensityMatrix::pure(const CVec& psi) {
  const double n = psi.norm();
  if (n <= 0.0) throw std::invalid_argument("DensityMatrix::pure: zero vector");
  const CVec u = psi / n;
  return DensityMatrix(u * u.adjoint(), Validate::no);
}

Projector::Projector(CMat m, int rank, Validate v) : m_(std::move(m)), rank_(rank) {
  if (v == Validate::no) return;
  if (m_.rows() != m_.cols()) throw std::invalid_argument("Projector: matrix not square");
  if (rank_ < 0 || rank_ > m_.rows()) throw std::invalid_argument("Projector: rank out of range");
  const double scale = std::max(1.0, m_.norm());
  if (!is_hermitian(m_)) throw std::invalid_argument("Projector: not Hermitian");
  if ((m_ * m_ - m_).norm() > 1e-8 * scale) throw std::invalid_argument("Projector: not idempotent");
  if (std::abs(m_.trace().real() - rank_) > 1e-8 * std::max(1.0, double(rank_)))
    throw std::invalid_argument("Projector: trace does not match rank");
}

Projector Projector::standard(int d, int rank) {
  return Projector(basis_projector_matrix(d, rank), rank, Validate::no);
}

double trace_distance(const CMat& a, const CMat& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("trace_distance: dimension mismatch");
  return trace_norm_hermitian(a - b);
}

double trace_distance(const DensityMatrix& a, const DensityMatrix& b) {
  return trace_distance(a.matrix(), b.matrix());
}

DensityMatrix project_to_density(const CMat& h) {
  if (!is_hermitian(h, 1e-8)) throw std::invalid_argument("project_to_density: input not Hermitian");
  const HermitianEigs eigs = hermitian_eigs((h + h.adjoint()) / 2.0);
  RVec clipped = eigs.values.cwiseMax(0.0);
  const double total = clipped.sum();
  if (total <= 0.0) throw std::runtime_error("project_to_density: all eigenvalues nonpositive");
  clipped /= total;
  CMat out = eigs.vectors * clipped.asDiagonal() * eigs.vectors.adjoint();
  out = (out + out.adjoint()) / 2.0;
  return DensityMatrix(std::move(out), Validate::no);
}

}  // namespace tomolab
