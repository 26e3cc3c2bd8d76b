#include "tomolab/rng.hpp"

#include <cmath>

namespace tomolab {

namespace {

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::mt19937_64 make_engine(std::uint64_t key) {
  std::seed_seq seq{static_cast<std::uint32_t>(mix64(key)),
                    static_cast<std::uint32_t>(mix64(key) >> 32),
                    static_cast<std::uint32_t>(mix64(key + 1)),
                    static_cast<std::uint32_t>(mix64(key + 1) >> 32),
                    static_cast<std::uint32_t>(mix64(key + 2)),
                    static_cast<std::uint32_t>(mix64(key + 2) >> 32)};
  return std::mt19937_64(seq);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed) : key_(mix64(seed)), engine_(make_engine(key_)) {}

RngStream::RngStream(std::uint64_t key, FromKeyTag) : key_(key), engine_(make_engine(key_)) {}

RngStream RngStream::from_key(std::uint64_t key) { return RngStream(key, FromKeyTag{}); }

RngStream RngStream::child(std::uint64_t index) const {
  return RngStream(mix64(key_ ^ mix64(index + 1)), FromKeyTag{});
}

double RngStream::uniform() { return uniform_(engine_); }

double RngStream::normal() { return normal_(engine_); }

HaarUnitary::HaarUnitary(int d, CMat m, Validate v) : dim(d), matrix(std::move(m)) {
  if (v == Validate::no) return;
  if (matrix.rows() != d || matrix.cols() != d) throw std::invalid_argument("HaarUnitary: dimension mismatch");
  if (!is_unitary(matrix)) throw std::invalid_argument("HaarUnitary: matrix not unitary");
}

CMat ginibre(int d, RngStream& rng) {
  if (d < 1) throw std::invalid_argument("ginibre: d must be positive");
  CMat z(d, d);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) z(i, j) = Complex(rng.normal(), rng.normal()) * inv_sqrt2;
  return z;
}

HaarUnitary haar_unitary(int d, RngStream& rng) {
  const CMat z = ginibre(d, rng);
  Eigen::HouseholderQR<CMat> qr(z);
  CMat q = qr.householderQ() * CMat::Identity(d, d);
  const CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < d; ++j) {
    const Complex rjj = r(j, j);
    const double mag = std::abs(rjj);
    if (mag > 0.0) q.col(j) *= rjj / mag;
  }
  return HaarUnitary(d, std::move(q), Validate::no);
}

CMat random_bounded_hermitian(int d, double lo, double hi, RngStream& rng) {
  if (lo > hi) throw std::invalid_argument("random_bounded_hermitian: empty range");
  const HaarUnitary v = haar_unitary(d, rng);
  RVec lambda(d);
  for (int i = 0; i < d; ++i) lambda(i) = lo + (hi - lo) * rng.uniform();
  CMat m = v.matrix * lambda.asDiagonal() * v.matrix.adjoint();
  return (m + m.adjoint()) / 2.0;
}

}  // namespace tomolab
