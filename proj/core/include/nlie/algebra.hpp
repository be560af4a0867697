#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "nlie/field.hpp"
#include "nlie/linalg.hpp"

namespace nlie {

/// Basis indices, 0-based. Structure constants are keyed by strictly
/// increasing tuples.
using IndexTuple = std::vector<std::size_t>;

/// All strictly increasing k-tuples from {0, ..., n-1}, in lexicographic order.
std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k);

/// Structure constants of an n-ary alternating bracket on F^d. Only strictly
/// increasing index tuples are stored; absent tuples are zero.
class StructureTensor {
 public:
  StructureTensor(Field f, unsigned arity, std::size_t dim);

  const Field& field() const { return field_; }
  unsigned arity() const { return arity_; }
  std::size_t dim() const { return dim_; }

  /// [e_{i_1}, ..., e_{i_n}] for a strictly increasing tuple.
  const Vector& value(std::span<const std::size_t> sorted) const;
  void set(std::span<const std::size_t> sorted, Vector v);

  /// [e_{i_1}, ..., e_{i_n}] for any tuple: zero on repeats, otherwise the
  /// stored value times the sign of the sorting permutation.
  Vector basis_bracket(std::span<const std::size_t> idx) const;

  /// Strictly increasing tuples carrying a nonzero value, lexicographic.
  std::vector<IndexTuple> support() const;
  bool is_zero() const { return support().empty(); }

  StructureTensor map(const Embedding& e) const;

  friend bool operator==(const StructureTensor& a, const StructureTensor& b) {
    return a.field_ == b.field_ && a.arity_ == b.arity_ && a.dim_ == b.dim_ && a.values_ == b.values_;
  }

 private:
  std::size_t slot(std::span<const std::size_t> sorted) const;

  Field field_;
  unsigned arity_;
  std::size_t dim_;
  std::vector<std::vector<std::size_t>> binom_;
  std::vector<Vector> values_;  // colex-ranked slots
};

enum class Validity { Unchecked, Valid, Invalid };

/// Outcome of the exhaustive Filippov check. When invalid, x and y are the
/// first violating basis tuples (lexicographic in x, then y) and lhs/rhs are
///   [e_x, [e_y]]   and   sum_i [e_y1, ..., [e_x, e_yi], ..., e_yn].
struct ValidationReport {
  bool valid = true;
  IndexTuple x;
  IndexTuple y;
  std::optional<Vector> lhs;
  std::optional<Vector> rhs;
};

class NLieAlgebra {
 public:
  /// Wraps a tensor without checking the identity.
  explicit NLieAlgebra(StructureTensor t) : tensor_(std::move(t)) {}
  /// Wraps and validates.
  static NLieAlgebra checked(StructureTensor t);

  const StructureTensor& tensor() const { return tensor_; }
  const Field& field() const { return tensor_.field(); }
  unsigned arity() const { return tensor_.arity(); }
  std::size_t dim() const { return tensor_.dim(); }

  Validity validity() const { return validity_; }
  const std::optional<ValidationReport>& report() const { return report_; }

  /// Scalar extension keeps the verdict of the original algebra.
  NLieAlgebra map(const Embedding& e) const;

 private:
  StructureTensor tensor_;
  Validity validity_ = Validity::Unchecked;
  std::optional<ValidationReport> report_;
};

/// Multilinear alternating bracket of n vectors.
Vector bracket(const NLieAlgebra& a, std::span<const Vector> xs);
Vector bracket(const StructureTensor& t, std::span<const Vector> xs);

/// Filippov identity on every basis (n-1)-tuple x and n-tuple y.
ValidationReport validate(const NLieAlgebra& a);

/// A^(1): span of all structure constants.
Subspace derived_algebra(const NLieAlgebra& a);

/// Closed under the bracket, checked on strictly increasing n-tuples of the
/// RREF basis of s.
bool is_subalgebra(const NLieAlgebra& a, const Subspace& s);

/// A^1 = A, A^{s+1} = [A^s, A, ..., A], up to and including the first
/// repeated member.
std::vector<Subspace> lower_central_series(const NLieAlgebra& a);
bool is_nilpotent(const NLieAlgebra& a);

/// Subalgebra spanned by s (assumed closed) as an algebra in the coordinates
/// of s's RREF basis; nullopt when dim s < n (every bracket vanishes).
std::optional<NLieAlgebra> restrict_to(const NLieAlgebra& a, const Subspace& s);
/// Nilpotency of the subalgebra s as an n-Lie algebra in its own right.
bool is_nilpotent_subalgebra(const NLieAlgebra& a, const Subspace& s);
/// Every n-fold bracket of elements of s vanishes.
bool is_abelian_subspace(const NLieAlgebra& a, const Subspace& s);
/// {x : [h_1, ..., h_{n-1}, x] in h for every basis (n-1)-tuple of h}.
Subspace normalizer(const NLieAlgebra& a, const Subspace& h);

/// The map x -> [a_1, ..., a_{n-1}, x].
struct Derivation {
  std::vector<Vector> tuple;
  Matrix matrix;
};

Derivation inner_derivation(const NLieAlgebra& a, const std::vector<Vector>& tuple);

/// Fitting null component ker d^dim of the inner derivation of the tuple.
Subspace engel_subalgebra(const NLieAlgebra& a, const std::vector<Vector>& tuple);

struct ExtendedAlgebra {
  NLieAlgebra algebra;
  Embedding embedding;
};

/// Scalar extension to the degree-m extension of the algebra's field.
ExtendedAlgebra extend_algebra(const NLieAlgebra& a, unsigned m);

/// Determinant by cofactor expansion (division free, for the small sizes used
/// in bracket evaluation).
Scalar determinant(const Matrix& m);

}  // namespace nlie
