#include "nlie/random.hpp"

namespace nlie {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

Scalar random_scalar(Rng& rng, const Field& f) {
  if (f.is_finite()) return f.element(rng.below(*f.order()));
  return f.from_int(static_cast<std::int64_t>(rng.below(7)) - 3);
}

Vector random_vector(Rng& rng, const Field& f, std::size_t n) {
  Vector v(f, n);
  for (std::size_t i = 0; i < n; ++i) v[i] = random_scalar(rng, f);
  return v;
}

Matrix random_matrix(Rng& rng, const Field& f, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_scalar(rng, f);
  }
  return m;
}

}  // namespace nlie
