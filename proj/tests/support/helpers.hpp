#pragma once

#include <initializer_list>
#include <optional>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/oracle.hpp"
#include "nlie/random.hpp"

namespace testing_support {

using namespace nlie;

inline Vector vec(const Field& f, std::initializer_list<const char*> xs) {
  Vector v(f, xs.size());
  std::size_t i = 0;
  for (const char* x : xs) v[i++] = f.parse(x);
  return v;
}

inline Vector e(const Field& f, std::size_t d, std::size_t one_based) { return Vector::unit(f, d, one_based - 1); }

inline Subspace span_units(const Field& f, std::size_t d, std::initializer_list<std::size_t> one_based) {
  std::vector<Vector> vs;
  for (auto i : one_based) vs.push_back(e(f, d, i));
  return Subspace::span(f, d, vs);
}

inline NLieAlgebra sparse(unsigned n, std::size_t d, const Field& f, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.arity = n;
  spec.dim = d;
  spec.field = f;
  spec.strategy = Strategy::Sparse;
  spec.seed = seed;
  return random_algebra(spec);
}

inline NLieAlgebra perfect(unsigned n, std::size_t d, const Field& f, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.arity = n;
  spec.dim = d;
  spec.field = f;
  spec.strategy = Strategy::PerfectFilter;
  spec.seed = seed;
  return random_algebra(spec);
}

// Changes random structure constants of a valid algebra until the Filippov
// identity fails; nullopt if no single change breaks it within the budget.
inline std::optional<NLieAlgebra> perturbed(const NLieAlgebra& a, std::uint64_t seed, int budget = 200) {
  Rng rng(seed);
  const auto tuples = increasing_tuples(a.dim(), a.arity());
  const Field f = a.field();
  for (int t = 0; t < budget; ++t) {
    StructureTensor s = a.tensor();
    const auto& idx = tuples[rng.below(tuples.size())];
    Vector v = s.value(idx);
    Scalar delta = random_scalar(rng, f);
    while (delta.is_zero()) delta = random_scalar(rng, f);
    v[rng.below(a.dim())] += delta;
    s.set(idx, v);
    NLieAlgebra b = NLieAlgebra::checked(s);
    if (b.validity() == Validity::Invalid) return b;
  }
  return std::nullopt;
}

}  // namespace testing_support
