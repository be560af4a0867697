#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlie/cartan.hpp"

namespace nlie {

enum class Branch {
  DerivedProper,
  CartanHyperplane,
  CartanPlusEigenvector,
  PairCharNe2,
  PairChar2,
  TripleCharNe2,
};

std::string_view to_string(Branch b);

struct CaseTrace {
  Branch branch = Branch::DerivedProper;
  std::optional<Subspace> h;
  std::vector<Vector> witness;
  /// alpha for CartanPlusEigenvector; the step-4 eigenvalue multiset otherwise.
  std::vector<Scalar> eigenvalues;
  std::optional<Vector> u;
  std::optional<Vector> v;
  std::optional<Scalar> theta;
};

struct Codim1Options {
  unsigned max_ext = 12;
  std::uint64_t seed = 0;
  std::uint64_t budget = 5000;
};

struct Codim1Result {
  Field field;
  unsigned extension_degree = 1;
  /// The input algebra over `field`.
  NLieAlgebra algebra;
  Subspace s;
  CaseTrace trace;
};

struct ContradictionReport {
  /// Which step gave out: "triple-char2", "no-zero-sum", "engel-bound",
  /// "null-component" or "verification".
  std::string kind;
  std::string conclusion;
  unsigned n = 0;
  std::optional<Field> field;
  std::optional<Subspace> h;
  std::optional<Matrix> d;
  std::vector<Scalar> eigenvalues;
  std::vector<Vector> vectors;  // u, v, w when known
  std::optional<Subspace> s;

  // Filippov expansion of P = [a, a_{n-2}, u, [a, a_{n-1}, v, w]] (triple case).
  bool reordering_found = false;
  std::vector<std::size_t> ordering;  // H basis order giving a_1 .. a_{n-1}
  std::optional<Vector> auvw;         // [a, u, v, w]
  std::optional<Vector> p_direct;
  std::optional<Vector> p_expansion;  // full sum over the n slots
  std::vector<Vector> listed_terms;   // the three slot terms with v, w and a_{n-1}
  std::optional<Vector> predicted;    // alpha [a, u, v, w]
};

class ContradictionError : public Error {
 public:
  explicit ContradictionError(ContradictionReport r)
      : Error(ErrorCode::Contradiction, r.kind + ": " + r.conclusion), report_(std::move(r)) {}
  const ContradictionReport& report() const { return report_; }

 private:
  ContradictionReport report_;
};

/// Codimension-1 subalgebra of an (n+2)-dimensional n-Lie algebra.
Codim1Result find_codim1(const NLieAlgebra& a, const Codim1Options& opts = {});

/// Evaluates P both ways for a char-2 configuration with distinct nonzero
/// eigenvalues alpha, beta, gamma = alpha + beta on eigenvectors u, v, w of d.
ContradictionReport unreachable_triple_check(const NLieAlgebra& a, const Subspace& h, const Matrix& d,
                                             const std::vector<Scalar>& eigenvalues, const Vector& u,
                                             const Vector& v, const Vector& w);

}  // namespace nlie
