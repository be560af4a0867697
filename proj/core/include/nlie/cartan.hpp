#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nlie/algebra.hpp"

namespace nlie {

struct EngelSearchOptions {
  /// Random tuples tried per extension level when exhaustive search is out of reach.
  std::uint64_t budget = 5000;
  std::uint64_t seed = 0;
  /// Largest total extension degree the search may move to.
  unsigned max_ext = 12;
  /// Exhaustive search when q^(d(n-1)) is at most this.
  std::uint64_t exhaustive_cap = std::uint64_t{1} << 20;
};

struct CartanReport {
  /// The algebra the search finished on (a scalar extension of the input).
  NLieAlgebra algebra;
  /// Degree of algebra.field() over the input field.
  unsigned extension_degree = 1;
  Subspace h;
  std::vector<Vector> witness;
  bool nilpotent = false;
  bool self_normalizing = false;
  bool exhaustive = false;
  /// Engel subalgebras examined at the final level.
  std::uint64_t examined = 0;
};

/// Smallest Engel subalgebra that is also nilpotent and self-normalizing.
/// Extensions are taken directly from the input field with degrees 2, 4, 8, ...
CartanReport minimal_engel_cartan(const NLieAlgebra& a, const EngelSearchOptions& opts = {});

/// Precomputed inner derivations of basis (n-1)-tuples; the derivation of an
/// arbitrary tuple is the sum of these weighted by (n-1)-minors.
class DerivationBasis {
 public:
  explicit DerivationBasis(const NLieAlgebra& a);
  Matrix operator()(const std::vector<Vector>& tuple) const;

 private:
  Field field_;
  std::size_t dim_;
  std::vector<IndexTuple> tuples_;
  std::vector<Matrix> mats_;
};

struct WeightComponent {
  Scalar lambda;
  Subspace space;
};

struct WeightDecomposition {
  Field field;
  unsigned extension_degree = 1;
  /// Derivation matrix over `field`.
  Matrix derivation;
  /// Distinct eigenvalues in canonical order.
  std::vector<WeightComponent> components;

  /// Component of lambda, or nullptr when lambda is not an eigenvalue.
  const WeightComponent* find(const Scalar& lambda) const;
};

/// Generalized eigenspaces of d, extending the field by the splitting degree of
/// its characteristic polynomial when needed.
WeightDecomposition weight_decomposition(const NLieAlgebra& a, const Derivation& d, unsigned max_ext);

/// Brackets of basis vectors drawn from any n components (with repetition) lie
/// in the component of the eigenvalue sum, or vanish if the sum is not one.
bool weight_relation_check(const NLieAlgebra& a, const WeightDecomposition& w);

struct CommonWeight {
  Field field;
  unsigned extension_degree = 1;
  /// Lift of the quotient eigenvector: zero on the pivots of H.
  Vector u;
  /// (n-1)-subsets of H's RREF basis, each with its eigenvalue on u modulo H.
  std::vector<IndexTuple> tuples;
  std::vector<Scalar> alpha;
};

/// Common eigenvector of the action of H on A/H. H must be abelian.
CommonWeight common_eigen_weights(const NLieAlgebra& a, const Subspace& h, unsigned max_ext);

}  // namespace nlie
