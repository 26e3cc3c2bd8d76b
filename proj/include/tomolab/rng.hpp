#pragma once

#include "tomolab/linalg.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace tomolab {

/// Seeded, splittable random stream. A stream is identified by a 64-bit key
/// derived from (seed, path); identical keys produce bit-identical output and
/// distinct derivation paths give statistically independent streams, so
/// parallel trials are reproducible regardless of scheduling.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  /// Independent sub-stream; derivation does not disturb this stream's state.
  RngStream child(std::uint64_t index) const;

  /// Rebuild a stream from a previously recorded key.
  static RngStream from_key(std::uint64_t key);

  std::uint64_t key() const { return key_; }

  std::mt19937_64& engine() { return engine_; }

  double uniform();  // [0, 1)
  double normal();   // N(0, 1)

 private:
  struct FromKeyTag {};
  RngStream(std::uint64_t key, FromKeyTag);

  std::uint64_t key_;
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

struct HaarUnitary {
  int dim;
  CMat matrix;

  HaarUnitary(int d, CMat m, Validate v = Validate::yes);
};

/// Matrix with i.i.d. standard complex Gaussian entries.
CMat ginibre(int d, RngStream& rng);

/// Haar-distributed unitary via QR of a Ginibre matrix with the R-diagonal
/// phase correction (naive QR is not Haar).
HaarUnitary haar_unitary(int d, RngStream& rng);

/// V diag(lambda) V^dag with Haar V and eigenvalues uniform in [lo, hi].
/// Test-instance generator for bounded Hermitian operators.
CMat random_bounded_hermitian(int d, double lo, double hi, RngStream& rng);

}  // namespace tomolab
