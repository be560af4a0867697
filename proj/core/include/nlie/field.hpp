#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nlie/error.hpp"

namespace nlie {

/// Largest total extension degree k of GF(p^k) the library will construct.
inline constexpr unsigned kMaxFieldDegree = 16;
/// Characteristics must satisfy p < 2^31 so residue sums fit in 32 bits and
/// products in 64 bits.
inline constexpr std::uint64_t kMaxCharacteristic = std::uint64_t{1} << 31;

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

namespace detail {
struct FieldData;
}

class Scalar;

/// Handle to an exact field: GF(p), GF(p^k) or Q.
///
/// Field descriptors are interned: two handles with equal (p, k) refer to the
/// same immutable descriptor for the lifetime of the process, so copying a
/// handle is free and equality is identity. The modulus of GF(p^k) is the
/// lexicographically smallest monic irreducible of degree k (coefficients
/// compared from the constant term upward).
class Field {
 public:
  /// The rationals.
  static Field rationals();

  std::uint32_t characteristic() const;
  unsigned degree() const;
  bool is_finite() const { return characteristic() != 0; }
  bool is_prime_field() const { return degree() == 1; }

  /// Number of elements when it fits in 64 bits.
  std::optional<std::uint64_t> order() const;

  /// Modulus coefficients, constant term first, including the leading 1.
  /// Empty for prime fields and Q.
  std::span<const std::uint32_t> modulus() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t value) const;
  Scalar from_rational(const Rational& value) const;
  /// Residue class g of x in GF(p)[x]/(modulus). For prime fields this is 1's
  /// image of x under the trivial presentation and equals zero when k = 1.
  Scalar generator() const;
  /// Element number `index` in the canonical enumeration
  /// sum_i c_i p^i  <->  c_0 + c_1 g + ... ; requires order() and index < q.
  Scalar element(std::uint64_t index) const;
  Scalar parse(std::string_view text) const;

  /// "Q", "GF(2)", "GF(2^3)".
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) { return a.data_ == b.data_; }

  const detail::FieldData* data() const { return data_; }

 private:
  friend Field make_field(std::int64_t p, int k);
  friend class Scalar;
  explicit Field(const detail::FieldData* data) : data_(data) {}

  const detail::FieldData* data_;
};

/// GF(p^k) for prime p < 2^31 and 1 <= k <= kMaxFieldDegree, or Q for p = 0.
Field make_field(std::int64_t p, int k = 1);

/// Inverse of Field::to_string; also accepts "GF(p,k)" and bare "p" or "p^k".
Field parse_field(std::string_view text);

/// An element of a Field. Values are immutable; arithmetic produces new values
/// in the same field and refuses to mix fields.
class Scalar {
 public:
  using Residues = std::array<std::uint32_t, kMaxFieldDegree>;

  Scalar() = default;

  Field field() const;
  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Scalar inv() const;
  Scalar pow(std::uint64_t e) const;
  Scalar pow(const BigInt& e) const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical enumeration index (finite fields only).
  std::uint64_t index() const;
  /// Coordinates over GF(p) in the power basis 1, g, ..., g^{k-1}.
  std::span<const std::uint32_t> residues() const;
  /// Value for Q.
  const Rational& rational() const;

  std::string to_string() const;

  const detail::FieldData* field_data() const { return f_; }

 private:
  friend class Field;
  friend class Embedding;

  const detail::FieldData* f_ = nullptr;
  Residues r_{};
  std::shared_ptr<const Rational> q_;
};

/// Total order used wherever the library needs a deterministic choice among
/// field elements: enumeration index for finite fields, numeric order on Q.
bool canonical_less(const Scalar& a, const Scalar& b);

/// Injective field homomorphism GF(p^k) -> GF(p^{km}), fixed by the image of
/// the source generator.
class Embedding {
 public:
  static Embedding identity(const Field& f);

  const Field& source() const { return source_; }
  const Field& target() const { return target_; }
  /// [target : source]
  unsigned degree() const;
  const Scalar& generator_image() const { return generator_image_; }

  Scalar operator()(const Scalar& x) const;

 private:
  friend std::pair<Field, Embedding> extend_field(const Field& f, unsigned m);
  Embedding(Field source, Field target, Scalar generator_image)
      : source_(source), target_(target), generator_image_(std::move(generator_image)) {}

  Field source_;
  Field target_;
  Scalar generator_image_;
};

/// GF(p^{km}) together with the embedding of GF(p^k). The generator is sent
/// to the canonically smallest root of the source modulus. m = 1 yields the
/// identity; Q admits only m = 1.
std::pair<Field, Embedding> extend_field(const Field& f, unsigned m);

namespace detail {

/// Arithmetic on polynomials over a prime field, coefficients low-first,
/// trimmed (no trailing zeros). Used for modulus selection and irreducibility.
namespace fp {
using Poly = std::vector<std::uint32_t>;

std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p);
std::uint32_t inv(std::uint32_t a, std::uint32_t p);

void trim(Poly& f);
Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p);
Poly rem(Poly a, const Poly& m, std::uint32_t p);
Poly gcd(Poly a, Poly b, std::uint32_t p);
Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p);
/// Rabin's test.
bool is_irreducible(const Poly& f, std::uint32_t p);
}  // namespace fp

bool is_prime(std::uint64_t n);

}  // namespace detail

}  // namespace nlie
