#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nlie/field.hpp"
#include "nlie/poly.hpp"

namespace nlie {

/// Coordinate vector over a Field.
class Vector {
 public:
  Vector(Field f, std::size_t n);
  Vector(Field f, std::vector<Scalar> coords);
  static Vector unit(const Field& f, std::size_t n, std::size_t i);

  const Field& field() const { return field_; }
  std::size_t size() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }

  bool is_zero() const;
  /// Index of the first nonzero coordinate, or size() for the zero vector.
  std::size_t leading_index() const;

  Vector& operator+=(const Vector& o);
  Vector& operator-=(const Vector& o);
  Vector& operator*=(const Scalar& s);
  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Scalar& s, Vector v) { return v *= s; }
  friend Vector operator*(Vector v, const Scalar& s) { return v *= s; }
  friend bool operator==(const Vector& a, const Vector& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  Vector map(const Embedding& e) const;
  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> c_;
};

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  bool is_zero() const;

  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Scalar& s, Matrix m) { return m *= s; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }

  Matrix pow(unsigned e) const;
  Matrix transpose() const;
  Matrix map(const Embedding& e) const;
  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> a_;
};

struct RrefResult {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Reduced row-echelon form (unique), rank and pivot columns.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Subspace of F^d stored as the nonzero rows of an RREF matrix, so equal
/// subspaces compare equal bit for bit.
class Subspace {
 public:
  static Subspace zero(const Field& f, std::size_t ambient);
  static Subspace full(const Field& f, std::size_t ambient);
  static Subspace span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors);

  const Field& field() const { return basis_.field(); }
  std::size_t ambient() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient(); }

  /// RREF basis rows.
  const Matrix& basis_matrix() const { return basis_; }
  std::vector<Vector> basis() const;
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates that are not pivots; the corresponding unit vectors span a
  /// complement.
  std::vector<std::size_t> free_indices() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& s) const;
  /// Canonical coset representative of v: v minus the element of this
  /// subspace agreeing with v on the pivot coordinates.
  Vector reduce(const Vector& v) const;
  /// Coordinates of a member in the RREF basis.
  Vector coordinates(const Vector& v) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

  Subspace map(const Embedding& e) const;
  std::string to_string() const;

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots) : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Exact null space {x : M x = 0}.
Subspace kernel(const Matrix& m);
/// Column space.
Subspace image(const Matrix& m);

/// det(xI - M), computed with Berkowitz's division-free recurrence.
Poly char_poly(const Matrix& m);
/// p(M).
Matrix evaluate(const Poly& p, const Matrix& m);

/// ker (M - lambda I)^e.
Subspace generalized_eigenspace(const Matrix& m, const Scalar& lambda, unsigned e);

struct CommonEigenvector {
  Field field;
  /// Degree of `field` over the matrices' field.
  unsigned extension_degree;
  Vector u;
  std::vector<Scalar> eigenvalues;
};

/// Nonzero u with M_i u = lambda_i u for every i, over the smallest extension
/// reached by successively splitting restricted characteristic polynomials.
/// The matrices must pairwise commute (NotCommuting otherwise) and the total
/// extension degree may not exceed max_ext (ExtensionBudgetExceeded).
/// Extensions are always taken directly from the input field, so the result
/// is compatible with extend_field(input, extension_degree).
CommonEigenvector common_eigenvector(const std::vector<Matrix>& ms, unsigned max_ext);

/// Hyperplane containing s: append e_1, e_2, ... skipping dependents.
Subspace complete_to_codim1(const Subspace& s);

}  // namespace nlie
