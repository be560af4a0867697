#pragma once

#include <cstdint>
#include <random>

#include "nlie/linalg.hpp"

namespace nlie {

/// Seeded generator with its own integer/real mappings, so streams are
/// identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Uniform element of a finite field; over Q an integer in [-3, 3].
Scalar random_scalar(Rng& rng, const Field& f);
Vector random_vector(Rng& rng, const Field& f, std::size_t n);
Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols);

}  // namespace nlie
