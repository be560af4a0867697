#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nlie/algebra.hpp"
#include "nlie/random.hpp"

namespace nlie {

inline constexpr std::uint64_t kEnumerationCap = std::uint64_t{1} << 20;

/// Every hyperplane of F^d once, as the kernel of a covector whose first
/// nonzero coordinate is 1. Covectors are visited by leading position, then by
/// the enumeration index of the remaining entries (last entry fastest).
/// The callback receives the hyperplane and its covector; returning false stops.
void enumerate_codim1_subspaces(std::size_t d, const Field& f,
                                const std::function<bool(const Subspace&, const Vector&)>& visit,
                                std::uint64_t cap = kEnumerationCap);
std::uint64_t codim1_count(std::size_t d, const Field& f);

std::vector<Subspace> all_codim1_subalgebras(const NLieAlgebra& a, std::uint64_t cap = kEnumerationCap);

struct FilippovCheck {
  bool holds = true;
  std::uint64_t trial = 0;
  std::vector<Vector> x;
  std::vector<Vector> y;
  std::optional<Vector> lhs;
  std::optional<Vector> rhs;
};

/// Both sides of the Filippov identity on seeded random vectors.
FilippovCheck filippov_random_check(const NLieAlgebra& a, std::uint64_t trials, std::uint64_t seed);

enum class Strategy { Sparse, PerfectFilter, Fixture };

struct GeneratorSpec {
  unsigned arity = 3;
  std::size_t dim = 5;
  Field field = make_field(2);
  Strategy strategy = Strategy::Sparse;
  double density = 0.3;
  std::uint64_t budget = 100000;
  /// Rank r of the grading group F^r; 0 draws plain sparse tensors. When
  /// unset: 0 for Sparse, 2 for PerfectFilter.
  std::optional<unsigned> grading;
  std::string fixture;
  std::uint64_t seed = 0;
};

/// Seeded random valid algebra (validity checked), or a named fixture.
/// NotFound when the budget runs out.
NLieAlgebra random_algebra(const GeneratorSpec& spec);

/// One draw of the sparse tensor distribution, without validation.
StructureTensor sparse_tensor(unsigned arity, std::size_t dim, const Field& f, double density, Rng& rng);

/// One draw of a graded tensor: basis vector e_j gets a weight w_j in F^rank
/// (each coordinate zero with probability 0.3), and [e_I] may only have
/// nonzero coordinates j with w_j = sum of w_i over I, each present with
/// probability `density` and then uniform among nonzero scalars.
StructureTensor graded_tensor(unsigned arity, std::size_t dim, const Field& f, unsigned rank, double density,
                              Rng& rng);

}  // namespace nlie
