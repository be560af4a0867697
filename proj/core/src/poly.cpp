#include "nlie/poly.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace nlie {

Poly::Poly(Field f, std::vector<Scalar> coeffs) : field_(f), c_(std::move(coeffs)) {
  for (const auto& c : c_) {
    if (c.field_data() != field_.data()) throw Error(ErrorCode::FieldMismatch, "polynomial coefficient field");
  }
  trim();
}

Poly Poly::x(const Field& f) { return Poly(f, {f.zero(), f.one()}); }
Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }
Poly Poly::linear(const Scalar& root) { return Poly(root.field(), {-root, root.field().one()}); }

void Poly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Scalar Poly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }

Poly Poly::monic() const {
  if (is_zero()) return *this;
  const Scalar li = leading().inv();
  Poly out = *this;
  for (auto& c : out.c_) c *= li;
  return out;
}

Poly Poly::derivative() const {
  std::vector<Scalar> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * field_.from_int(static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(d));
}

Scalar Poly::operator()(const Scalar& at) const {
  Scalar acc = field_.zero();
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
  return acc;
}

Poly& Poly::operator+=(const Poly& o) {
  if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial sum");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial difference");
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (!(a.field_ == b.field_)) throw Error(ErrorCode::FieldMismatch, "polynomial product");
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> out(a.c_.size() + b.c_.size() - 1, a.field_.zero());
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Poly(a.field_, std::move(out));
}

Poly operator*(const Poly& a, const Scalar& s) {
  std::vector<Scalar> out = a.c_;
  for (auto& c : out) c *= s;
  return Poly(a.field_, std::move(out));
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    const std::string c = c_[i].to_string();
    const bool wrap = c.find_first_of("+-") != std::string::npos && i > 0;
    if (i == 0 || !c_[i].is_one()) out += wrap ? "(" + c + ")" : c;
    if (i > 0) out += "x";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by the zero polynomial");
  const Field& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Scalar> rem = a.coeffs();
  std::vector<Scalar> quo(rem.size() - b.coeffs().size() + 1, f.zero());
  const Scalar li = b.leading().inv();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t i = rem.size(); i-- > db;) {
    if (rem[i].is_zero()) continue;
    const Scalar t = rem[i] * li;
    quo[i - db] = t;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] -= t * b.coeffs()[j];
  }
  rem.resize(db);
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(Poly base, const BigInt& e, const Poly& m) {
  Poly result = Poly::constant(m.field().one()) % m;
  base = base % m;
  if (e == 0) return result;
  const std::size_t bits = boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result = mulmod(result, base, m);
    if (i + 1 < bits) base = mulmod(base, base, m);
  }
  return result;
}

Poly frobenius_power(const Poly& m, unsigned j) {
  const Field& f = m.field();
  Poly x = Poly::x(f) % m;
  const BigInt p = f.characteristic();
  for (unsigned i = 0; i < j * f.degree(); ++i) x = powmod(x, p, m);
  return x;
}

Poly map_coefficients(const Poly& f, const Embedding& e) {
  std::vector<Scalar> c;
  c.reserve(f.coeffs().size());
  for (const auto& s : f.coeffs()) c.push_back(e(s));
  return Poly(e.target(), std::move(c));
}

namespace {

BigInt field_order(const Field& f) {
  BigInt q = 1;
  for (unsigned i = 0; i < f.degree(); ++i) q *= f.characteristic();
  return q;
}

// Splits a squarefree product of distinct linear factors.
void split_linear(const Poly& g, std::mt19937_64& rng, std::vector<Scalar>& out) {
  const Field& f = g.field();
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-(g.coeff(0) / g.coeff(1)));
    return;
  }
  const BigInt q = field_order(f);
  const std::uint32_t p = f.characteristic();
  for (;;) {
    // Random field element from its residues.
    Scalar a = f.zero();
    Scalar gpow = f.one();
    for (unsigned i = 0; i < f.degree(); ++i) {
      a += f.from_int(static_cast<std::int64_t>(rng() % p)) * gpow;
      if (f.degree() > 1) gpow *= f.generator();
    }
    Poly h(f);
    if (p != 2) {
      h = powmod(Poly(f, {a, f.one()}), (q - 1) / 2, g) - Poly::constant(f.one());
    } else {
      // Absolute trace of a*x: sum_{i < k} (a x)^(2^i).
      Poly t = Poly(f, {f.zero(), a}) % g;
      h = t;
      for (unsigned i = 1; i < f.degree(); ++i) {
        t = mulmod(t, t, g);
        h += t;
      }
    }
    Poly d = gcd(g, h);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      split_linear(d, rng, out);
      split_linear(divmod(g, d).quotient, rng, out);
      return;
    }
  }
}

std::vector<BigInt> divisors(BigInt n) {
  if (n < 0) n = -n;
  constexpr std::int64_t kTrialLimit = 2'000'000;
  std::vector<BigInt> small, large;
  for (BigInt d = 1; d * d <= n; ++d) {
    if (d > kTrialLimit) {
      throw Error(ErrorCode::RationalsUnsupported, "rational root test on coefficients too large to factor");
    }
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::vector<Scalar> rational_roots(const Poly& f) {
  const Field& F = f.field();
  // Integer primitive multiple.
  BigInt l = 1;
  for (const auto& c : f.coeffs()) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(c.rational()));
  std::vector<BigInt> z;
  for (const auto& c : f.coeffs()) z.push_back(boost::multiprecision::numerator(Rational(c.rational() * l)));
  std::size_t low = 0;
  while (z[low] == 0) ++low;
  std::vector<Scalar> candidates;
  if (low > 0) candidates.push_back(F.zero());
  if (static_cast<int>(low) < f.degree()) {
    for (const BigInt& a : divisors(z[low])) {
      for (const BigInt& b : divisors(z.back())) {
        candidates.push_back(F.from_rational(Rational(a, b)));
        candidates.push_back(F.from_rational(Rational(-a, b)));
      }
    }
  }
  std::vector<Scalar> out;
  for (const auto& c : candidates) {
    if (f(c).is_zero() && std::none_of(out.begin(), out.end(), [&](const Scalar& s) { return s == c; })) {
      out.push_back(c);
    }
  }
  return out;
}

}  // namespace

std::vector<Scalar> roots_in_field(const Poly& f, const RootOptions& opts) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "roots of the zero polynomial");
  const Field& F = f.field();
  std::vector<Scalar> distinct;
  if (f.degree() == 0) return {};
  if (!F.is_finite()) {
    distinct = rational_roots(f);
  } else {
    const Poly m = f.monic();
    const Poly xq = frobenius_power(m, 1);
    const Poly linear_part = gcd(m, xq - Poly::x(F));
    if (linear_part.degree() > 0) {
      const auto order = F.order();
      if (order && *order <= opts.exhaustive_limit) {
        for (std::uint64_t i = 0; i < *order; ++i) {
          const Scalar s = F.element(i);
          if (linear_part(s).is_zero()) distinct.push_back(s);
        }
      } else {
        std::mt19937_64 rng(opts.seed);
        split_linear(linear_part, rng, distinct);
      }
    }
  }
  std::sort(distinct.begin(), distinct.end(), canonical_less);
  std::vector<Scalar> out;
  for (const auto& r : distinct) {
    Poly rest = f;
    for (;;) {
      DivMod dm = divmod(rest, Poly::linear(r));
      if (!dm.remainder.is_zero()) break;
      out.push_back(r);
      rest = std::move(dm.quotient);
    }
  }
  return out;
}

std::vector<unsigned> irreducible_factor_degrees(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "factor degrees of the zero polynomial");
  const Field& F = f.field();
  if (!F.is_finite()) throw Error(ErrorCode::RationalsUnsupported, "distinct-degree factorisation over Q");
  std::vector<unsigned> degrees;
  Poly g = f.monic();
  const Poly x = Poly::x(F);
  Poly xp = x % g;
  const BigInt p = F.characteristic();
  for (unsigned i = 1; g.degree() > 0; ++i) {
    if (static_cast<int>(2 * i) > g.degree()) {
      // Every remaining factor has degree >= i, so g is irreducible.
      degrees.push_back(static_cast<unsigned>(g.degree()));
      break;
    }
    for (unsigned j = 0; j < F.degree(); ++j) xp = powmod(xp, p, g);
    Poly d = gcd(g, xp - x);
    if (d.degree() > 0) {
      degrees.push_back(i);
      for (Poly c = gcd(g, d); c.degree() > 0; c = gcd(g, d)) g = divmod(g, c).quotient;
      if (g.degree() > 0) xp = xp % g;
    }
  }
  return degrees;
}

unsigned splitting_degree(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "splitting degree of the zero polynomial");
  if (!f.field().is_finite()) {
    if (static_cast<int>(roots_in_field(f).size()) == f.degree()) return 1;
    throw Error(ErrorCode::NeedsAlgebraicNumbers, "polynomial " + f.to_string() + " does not split over Q");
  }
  unsigned m = 1;
  for (unsigned d : irreducible_factor_degrees(f)) m = std::lcm(m, d);
  return m;
}

}  // namespace nlie
