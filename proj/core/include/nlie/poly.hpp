#pragma once

#include <cstdint>
#include <vector>

#include "nlie/field.hpp"

namespace nlie {

/// Dense univariate polynomial over a Field, coefficients constant-first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient
/// is nonzero.
class Poly {
 public:
  explicit Poly(Field f) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coeffs);

  static Poly x(const Field& f);
  static Poly constant(const Scalar& c);
  /// x - r
  static Poly linear(const Scalar& root);

  const Field& field() const { return field_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  /// Coefficient of x^i (zero beyond the degree).
  Scalar coeff(std::size_t i) const;
  const Scalar& leading() const { return c_.back(); }

  Poly monic() const;
  Poly derivative() const;
  Scalar operator()(const Scalar& at) const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Scalar& s);
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();

  Field field_;
  std::vector<Scalar> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

/// Euclidean division; throws ZeroPolynomial when the divisor is zero.
DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic gcd (zero when both inputs are zero).
Poly gcd(Poly a, Poly b);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(Poly base, const BigInt& e, const Poly& m);
/// x^(q^j) mod m, where q is the field order; computed by repeated p-th powers.
Poly frobenius_power(const Poly& m, unsigned j);

struct RootOptions {
  /// Fields with at most this many elements are searched exhaustively after
  /// the gcd with x^q - x; larger fields use equal-degree splitting.
  std::uint64_t exhaustive_limit = 1u << 12;
  /// Seed for the randomised splitting (the output never depends on it).
  std::uint64_t seed = 0x6e6c6965;
};

/// Roots of f lying in its field, repeated according to multiplicity and
/// sorted by canonical_less. Over Q uses the rational root test.
std::vector<Scalar> roots_in_field(const Poly& f, const RootOptions& opts = {});

/// Degrees of the irreducible factors of f over a finite field (distinct-degree
/// factorisation); each degree appears once, ascending.
std::vector<unsigned> irreducible_factor_degrees(const Poly& f);

/// Least m such that f splits into linear factors over the degree-m extension.
/// Over Q: 1 if f splits, otherwise NeedsAlgebraicNumbers.
unsigned splitting_degree(const Poly& f);

/// Image of f under a field embedding.
Poly map_coefficients(const Poly& f, const Embedding& e);

}  // namespace nlie
