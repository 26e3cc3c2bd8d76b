#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <stdexcept>

namespace tomolab {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using CVec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;

namespace tol {
// Double-precision eigensolver noise floor with margin.
inline constexpr double hermitian = 1e-9;          // relative
inline constexpr double trace = 1e-9;              // relative
inline constexpr double psd = 1e-9;                // absolute eigenvalue floor
inline constexpr double unitary = 1e-9;            // Frobenius
inline constexpr double povm_completeness = 1e-8;  // Frobenius
}  // namespace tol

bool is_finite(const CMat& a);
bool is_hermitian(const CMat& a, double tau = tol::hermitian);
bool is_unitary(const CMat& a, double tau = tol::unitary);

/// Eigendecomposition of a Hermitian matrix, eigenvalues ascending.
struct HermitianEigs {
  RVec values;
  CMat vectors;  // columns are eigenvectors
};
HermitianEigs hermitian_eigs(const CMat& a);

double frobenius_norm(const CMat& a);
/// Sum of absolute eigenvalues; requires a Hermitian input.
double trace_norm_hermitian(const CMat& a);
/// Largest singular value.
double spectral_norm(const CMat& a);

CMat kron(const CMat& a, const CMat& b);

/// Swap operator on C^d (x) C^d: W |i>|j> = |j>|i>.
CMat swap_operator(int d);

/// Partial trace over the second factor of a (d1*d2) x (d1*d2) operator.
CMat partial_trace_second(const CMat& ab, int d1, int d2);

/// Projector onto the span of the first `rank` standard basis vectors.
CMat basis_projector_matrix(int d, int rank);

enum class Validate { yes, no };

/// Hermitian, PSD, unit-trace operator. Validated on construction so that
/// hot loops stay cheap; generators whose output is analytically forced may
/// pass Validate::no.
class DensityMatrix {
 public:
  explicit DensityMatrix(CMat m, Validate v = Validate::yes);

  int dim() const { return static_cast<int>(m_.rows()); }
  const CMat& matrix() const { return m_; }

  static DensityMatrix maximally_mixed(int d);
  static DensityMatrix pure(const CVec& psi);

 private:
  CMat m_;
};

/// Orthogonal projection operator of known rank.
class Projector {
 public:
  Projector(CMat m, int rank, Validate v = Validate::yes);

  int dim() const { return static_cast<int>(m_.rows()); }
  int rank() const { return rank_; }
  const CMat& matrix() const { return m_; }

  /// Q_k: projector onto the first k standard basis vectors.
  static Projector standard(int d, int rank);

 private:
  CMat m_;
  int rank_;
};

double trace_distance(const DensityMatrix& a, const DensityMatrix& b);
/// Trace distance of two Hermitian matrices (e.g. a raw estimate vs a state).
double trace_distance(const CMat& a, const CMat& b);

/// Clip negative eigenvalues at zero and renormalize to unit trace.
/// Throws if everything is clipped away.
DensityMatrix project_to_density(const CMat& h);

}  // namespace tomolab
