#include "nlie/field.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <mutex>

#include "nlie/poly.hpp"

namespace nlie {

namespace detail {

struct FieldData {
  std::uint32_t p = 0;
  unsigned k = 1;
  std::vector<std::uint32_t> modulus;  // low-first, monic, size k+1 (empty when k == 1)
  std::optional<std::uint64_t> order;
  std::string name;
};

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

namespace fp {

std::uint32_t add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint32_t sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return a >= b ? a - b : a + (p - b);
}

std::uint32_t mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}

std::uint32_t inv(std::uint32_t a, std::uint32_t p) {
  if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly rem(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint32_t t = mul(a.back(), lead_inv, p);
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[shift + j] = sub(a[shift + j], mul(t, m[j], p), p);
    }
    trim(a);
  }
  return a;
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly prod(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      prod[i + j] = add(prod[i + j], mul(a[i], b[j], p), p);
    }
  }
  return rem(std::move(prod), m, p);
}

Poly gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t li = inv(a.back(), p);
    for (auto& c : a) c = mul(c, li, p);
  }
  return a;
}

Poly powmod(Poly base, std::uint64_t e, const Poly& m, std::uint32_t p) {
  Poly result{1};
  result = rem(std::move(result), m, p);
  base = rem(std::move(base), m, p);
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m, p);
    e >>= 1;
    if (e) base = mulmod(base, base, m, p);
  }
  return result;
}

namespace {

// x^(p^j) mod f, computed by j successive p-th powers.
Poly frobenius_power(const Poly& f, unsigned j, std::uint32_t p) {
  Poly x = rem(Poly{0, 1}, f, p);
  for (unsigned i = 0; i < j; ++i) x = powmod(x, p, f, p);
  return x;
}

std::vector<unsigned> prime_divisors(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned d = 2; d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return out;
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const unsigned k = static_cast<unsigned>(f.size()) - 1;
  if (k == 0) return false;
  if (k == 1) return true;
  Poly x{0, 1};
  Poly xq = frobenius_power(f, k, p);
  fp::trim(xq);
  if (xq != rem(x, f, p)) return false;
  for (unsigned r : prime_divisors(k)) {
    Poly h = frobenius_power(f, k / r, p);
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = sub(h[1], 1, p);
    trim(h);
    if (gcd(f, h, p).size() != 1) return false;
  }
  return true;
}

}  // namespace fp

namespace {

std::optional<std::uint64_t> checked_order(std::uint32_t p, unsigned k) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (q > std::numeric_limits<std::uint64_t>::max() / p) return std::nullopt;
    q *= p;
  }
  return q;
}

// Lexicographically smallest monic irreducible of degree k, comparing the
// coefficient sequence (c_0, c_1, ..., c_{k-1}) from c_0.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, unsigned k) {
  std::vector<std::uint32_t> coeffs(k, 0);
  coeffs[0] = 1;  // c_0 = 0 means x divides f
  for (;;) {
    fp::Poly f(coeffs.begin(), coeffs.end());
    f.push_back(1);
    if (fp::is_irreducible(f, p)) return f;
    // Counter whose least significant digit is c_{k-1}.
    int pos = static_cast<int>(k) - 1;
    while (pos >= 0) {
      if (++coeffs[pos] < p) break;
      coeffs[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }
  throw Error(ErrorCode::DegreeUnsupported, "no irreducible polynomial found");
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<std::uint32_t, unsigned>, std::unique_ptr<FieldData>> fields;
};

Registry& registry() {
  static Registry r;
  return r;
}

}  // namespace
}  // namespace detail

using detail::FieldData;
namespace fp = detail::fp;

Field make_field(std::int64_t p, int k) {
  if (p < 0 || (p != 0 && !detail::is_prime(static_cast<std::uint64_t>(p)))) {
    throw Error(ErrorCode::NonPrimeCharacteristic, std::to_string(p) + " is not prime");
  }
  if (static_cast<std::uint64_t>(p) >= kMaxCharacteristic) {
    throw Error(ErrorCode::DegreeUnsupported, "characteristic must be below 2^31");
  }
  if (k < 1 || static_cast<unsigned>(k) > kMaxFieldDegree) {
    throw Error(ErrorCode::DegreeUnsupported,
                "degree " + std::to_string(k) + " outside [1, " + std::to_string(kMaxFieldDegree) + "]");
  }
  if (p == 0 && k != 1) {
    throw Error(ErrorCode::RationalsNotExtendable, "Q has no finite-degree presentation here");
  }
  auto& reg = detail::registry();
  const auto key = std::make_pair(static_cast<std::uint32_t>(p), static_cast<unsigned>(k));
  std::lock_guard lock(reg.mu);
  auto it = reg.fields.find(key);
  if (it == reg.fields.end()) {
    auto data = std::make_unique<FieldData>();
    data->p = key.first;
    data->k = key.second;
    if (p == 0) {
      data->name = "Q";
    } else {
      data->order = detail::checked_order(data->p, data->k);
      if (k > 1) data->modulus = detail::smallest_irreducible(data->p, data->k);
      data->name = k == 1 ? "GF(" + std::to_string(p) + ")"
                          : "GF(" + std::to_string(p) + "^" + std::to_string(k) + ")";
    }
    it = reg.fields.emplace(key, std::move(data)).first;
  }
  return Field(it->second.get());
}

Field Field::rationals() { return make_field(0, 1); }

std::uint32_t Field::characteristic() const { return data_->p; }
unsigned Field::degree() const { return data_->k; }
std::optional<std::uint64_t> Field::order() const { return data_->order; }
std::span<const std::uint32_t> Field::modulus() const { return data_->modulus; }
std::string Field::to_string() const { return data_->name; }

Scalar Field::zero() const {
  Scalar s;
  s.f_ = data_;
  if (!is_finite()) s.q_ = std::make_shared<const Rational>(0);
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t value) const {
  Scalar s;
  s.f_ = data_;
  if (!is_finite()) {
    s.q_ = std::make_shared<const Rational>(value);
  } else {
    const std::int64_t p = data_->p;
    std::int64_t r = value % p;
    if (r < 0) r += p;
    s.r_[0] = static_cast<std::uint32_t>(r);
  }
  return s;
}

Scalar Field::from_rational(const Rational& value) const {
  if (!is_finite()) {
    Scalar s;
    s.f_ = data_;
    s.q_ = std::make_shared<const Rational>(value);
    return s;
  }
  const BigInt p = data_->p;
  BigInt num = boost::multiprecision::numerator(value) % p;
  BigInt den = boost::multiprecision::denominator(value) % p;
  if (num < 0) num += p;
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator divisible by the characteristic");
  return from_int(static_cast<std::int64_t>(num)) / from_int(static_cast<std::int64_t>(den));
}

Scalar Field::generator() const {
  Scalar s;
  s.f_ = data_;
  if (!is_finite()) throw Error(ErrorCode::RationalsUnsupported, "Q has no generator");
  if (data_->k > 1) s.r_[1] = 1;
  return s;
}

Scalar Field::element(std::uint64_t index) const {
  if (!data_->order || index >= *data_->order) {
    throw Error(ErrorCode::IndexOutOfRange, "element index outside the field");
  }
  Scalar s;
  s.f_ = data_;
  for (unsigned i = 0; i < data_->k; ++i) {
    s.r_[i] = static_cast<std::uint32_t>(index % data_->p);
    index /= data_->p;
  }
  return s;
}

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::optional<std::int64_t> parse_int(std::string_view s) {
  s = strip(s);
  if (s.empty()) return std::nullopt;
  std::int64_t v = 0;
  const char* first = s.data();
  if (*first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace

Scalar Field::parse(std::string_view text) const {
  const std::string_view s = strip(text);
  const auto fail = [&] {
    return Error(ErrorCode::ScalarSyntax, "cannot parse '" + std::string(text) + "' in " + to_string());
  };
  if (s.empty()) throw fail();
  if (!is_finite()) {
    std::string buf;
    for (char c : s) {
      if (!std::isspace(static_cast<unsigned char>(c))) buf.push_back(c);
    }
    const auto slash = buf.find('/');
    const auto valid_int = [](std::string_view t) {
      if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
      return !t.empty() && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    const std::string num_text = buf.substr(0, slash);
    const std::string den_text = slash == std::string::npos ? "1" : buf.substr(slash + 1);
    if (!valid_int(num_text) || !valid_int(den_text)) throw fail();
    const BigInt num(num_text.front() == '+' ? num_text.substr(1) : num_text);
    const BigInt den(den_text.front() == '+' ? den_text.substr(1) : den_text);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
    return from_rational(Rational(num, den));
  }
  // Sum of terms  [coef][g[^e]]  separated by + or -.
  Scalar acc = zero();
  std::size_t i = 0;
  bool any = false;
  while (i < s.size()) {
    bool negative = false;
    while (i < s.size() && (s[i] == '+' || s[i] == '-' || std::isspace(static_cast<unsigned char>(s[i])))) {
      if (s[i] == '-') negative = !negative;
      ++i;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
    std::string_view term = strip(s.substr(i, j - i));
    if (term.empty()) throw fail();
    i = j;
    const auto gpos = term.find('g');
    Scalar value;
    if (gpos == std::string_view::npos) {
      auto c = parse_int(term);
      if (!c) throw fail();
      value = from_int(*c);
    } else {
      if (data_->k == 1) throw fail();
      std::string_view coef = strip(term.substr(0, gpos));
      if (!coef.empty() && coef.back() == '*') coef = strip(coef.substr(0, coef.size() - 1));
      std::int64_t c = 1;
      if (!coef.empty()) {
        auto parsed = parse_int(coef);
        if (!parsed) throw fail();
        c = *parsed;
      }
      std::string_view rest = strip(term.substr(gpos + 1));
      std::uint64_t e = 1;
      if (!rest.empty()) {
        if (rest.front() != '^') throw fail();
        auto parsed = parse_int(rest.substr(1));
        if (!parsed || *parsed < 0) throw fail();
        e = static_cast<std::uint64_t>(*parsed);
      }
      value = from_int(c) * generator().pow(e);
    }
    acc += negative ? -value : value;
    any = true;
  }
  if (!any) throw fail();
  return acc;
}

Field parse_field(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "Q" || s == "q") return Field::rationals();
  std::string body = s;
  if ((s.rfind("GF(", 0) == 0 || s.rfind("gf(", 0) == 0) && s.back() == ')') {
    body = s.substr(3, s.size() - 4);
  }
  const auto sep = body.find_first_of("^,");
  auto p = parse_int(body.substr(0, sep));
  std::optional<std::int64_t> k = 1;
  if (sep != std::string::npos) k = parse_int(body.substr(sep + 1));
  if (!p || !k || *p < 2) {
    throw Error(ErrorCode::ParseError, "cannot parse field descriptor '" + std::string(text) + "'");
  }
  if (*k < 1 || *k > static_cast<std::int64_t>(kMaxFieldDegree)) {
    throw Error(ErrorCode::DegreeUnsupported, "degree out of range in '" + std::string(text) + "'");
  }
  if (sep == std::string::npos && !detail::is_prime(static_cast<std::uint64_t>(*p))) {
    // GF(q) with q a prime power.
    std::int64_t q = *p, base = 0;
    for (std::int64_t d = 2; d * d <= q; ++d) {
      if (q % d == 0) {
        base = d;
        break;
      }
    }
    int deg = 0;
    while (base > 1 && q % base == 0) {
      q /= base;
      ++deg;
    }
    if (base > 1 && q == 1) return make_field(base, deg);
  }
  return make_field(*p, static_cast<int>(*k));
}

// ---------------------------------------------------------------- Scalar

namespace {

void require_same(const Scalar& a, const Scalar& b) {
  if (a.field_data() != b.field_data() || a.field_data() == nullptr) {
    throw Error(ErrorCode::FieldMismatch, "scalars from different fields");
  }
}

}  // namespace

Field Scalar::field() const {
  if (!f_) throw Error(ErrorCode::FieldMismatch, "uninitialised scalar");
  return Field(f_);
}

bool Scalar::is_zero() const {
  if (f_->p == 0) return *q_ == 0;
  for (unsigned i = 0; i < f_->k; ++i) {
    if (r_[i] != 0) return false;
  }
  return true;
}

bool Scalar::is_one() const {
  if (f_->p == 0) return *q_ == 1;
  if (r_[0] != 1) return false;
  for (unsigned i = 1; i < f_->k; ++i) {
    if (r_[i] != 0) return false;
  }
  return true;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (f_->p == 0) {
    out.q_ = std::make_shared<const Rational>(-*q_);
  } else {
    for (unsigned i = 0; i < f_->k; ++i) out.r_[i] = r_[i] == 0 ? 0 : f_->p - r_[i];
  }
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same(*this, o);
  if (f_->p == 0) {
    q_ = std::make_shared<const Rational>(*q_ + *o.q_);
  } else {
    for (unsigned i = 0; i < f_->k; ++i) r_[i] = fp::add(r_[i], o.r_[i], f_->p);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same(*this, o);
  if (f_->p == 0) {
    q_ = std::make_shared<const Rational>(*q_ - *o.q_);
  } else {
    for (unsigned i = 0; i < f_->k; ++i) r_[i] = fp::sub(r_[i], o.r_[i], f_->p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same(*this, o);
  const std::uint32_t p = f_->p;
  const unsigned k = f_->k;
  if (p == 0) {
    q_ = std::make_shared<const Rational>(*q_ * *o.q_);
    return *this;
  }
  if (k == 1) {
    r_[0] = fp::mul(r_[0], o.r_[0], p);
    return *this;
  }
  std::array<std::uint64_t, 2 * kMaxFieldDegree> prod{};
  for (unsigned i = 0; i < k; ++i) {
    if (r_[i] == 0) continue;
    for (unsigned j = 0; j < k; ++j) {
      prod[i + j] += static_cast<std::uint64_t>(r_[i]) * o.r_[j] % p;
    }
  }
  for (unsigned i = 0; i < 2 * k - 1; ++i) prod[i] %= p;
  const auto& m = f_->modulus;
  for (unsigned i = 2 * k - 2; i >= k; --i) {
    const std::uint64_t t = prod[i];
    if (t == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < k; ++j) {
      const std::uint64_t sub = t * m[j] % p;
      prod[i - k + j] = (prod[i - k + j] + p - sub) % p;
    }
  }
  for (unsigned i = 0; i < k; ++i) r_[i] = static_cast<std::uint32_t>(prod[i]);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inv(); }

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero in " + field().to_string());
  Scalar out = *this;
  const std::uint32_t p = f_->p;
  if (p == 0) {
    out.q_ = std::make_shared<const Rational>(1 / *q_);
    return out;
  }
  if (f_->k == 1) {
    out.r_[0] = fp::inv(r_[0], p);
    return out;
  }
  // Extended Euclid in GF(p)[x] against the modulus.
  fp::Poly a(r_.begin(), r_.begin() + f_->k);
  fp::trim(a);
  fp::Poly b = f_->modulus;
  fp::Poly s0{1}, s1{};
  while (!b.empty()) {
    // a = q b + r
    fp::Poly q, r = a;
    const std::uint32_t li = fp::inv(b.back(), p);
    if (r.size() >= b.size()) q.assign(r.size() - b.size() + 1, 0);
    while (r.size() >= b.size()) {
      const std::uint32_t t = fp::mul(r.back(), li, p);
      const std::size_t shift = r.size() - b.size();
      q[shift] = t;
      for (std::size_t j = 0; j < b.size(); ++j) r[shift + j] = fp::sub(r[shift + j], fp::mul(t, b[j], p), p);
      fp::trim(r);
    }
    // s2 = s0 - q s1
    fp::Poly qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i) {
      for (std::size_t j = 0; j < s1.size(); ++j) qs[i + j] = fp::add(qs[i + j], fp::mul(q[i], s1[j], p), p);
    }
    fp::Poly s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      const std::uint32_t x = i < s0.size() ? s0[i] : 0;
      const std::uint32_t y = i < qs.size() ? qs[i] : 0;
      s2[i] = fp::sub(x, y, p);
    }
    fp::trim(s2);
    a = std::move(b);
    b = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // a is a nonzero constant c; inverse = s0 / c.
  const std::uint32_t ci = fp::inv(a[0], p);
  out.r_.fill(0);
  for (std::size_t i = 0; i < s0.size(); ++i) out.r_[i] = fp::mul(s0[i], ci, p);
  return out;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

Scalar Scalar::pow(const BigInt& e) const {
  if (e < 0) return inv().pow(BigInt(-e));
  Scalar result = field().one();
  Scalar base = *this;
  const std::size_t bits = e == 0 ? 0 : boost::multiprecision::msb(e) + 1;
  for (std::size_t i = 0; i < bits; ++i) {
    if (boost::multiprecision::bit_test(e, static_cast<unsigned>(i))) result *= base;
    if (i + 1 < bits) base *= base;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.f_ != b.f_) return false;
  if (a.f_ == nullptr) return true;
  if (a.f_->p == 0) return *a.q_ == *b.q_;
  for (unsigned i = 0; i < a.f_->k; ++i) {
    if (a.r_[i] != b.r_[i]) return false;
  }
  return true;
}

std::uint64_t Scalar::index() const {
  if (f_->p == 0) throw Error(ErrorCode::RationalsUnsupported, "Q elements have no enumeration index");
  std::uint64_t idx = 0;
  for (unsigned i = f_->k; i-- > 0;) idx = idx * f_->p + r_[i];
  return idx;
}

std::span<const std::uint32_t> Scalar::residues() const {
  return std::span<const std::uint32_t>(r_.data(), f_->p == 0 ? 0 : f_->k);
}

const Rational& Scalar::rational() const {
  if (f_->p != 0) throw Error(ErrorCode::FieldMismatch, "not a rational scalar");
  return *q_;
}

std::string Scalar::to_string() const {
  if (f_->p == 0) {
    const Rational& v = *q_;
    if (boost::multiprecision::denominator(v) == 1) return boost::multiprecision::numerator(v).str();
    return boost::multiprecision::numerator(v).str() + "/" + boost::multiprecision::denominator(v).str();
  }
  if (f_->k == 1) return std::to_string(r_[0]);
  std::string out;
  for (unsigned i = f_->k; i-- > 0;) {
    const std::uint32_t c = r_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c);
      out += 'g';
      if (i > 1) out += '^' + std::to_string(i);
    }
  }
  return out.empty() ? "0" : out;
}

bool canonical_less(const Scalar& a, const Scalar& b) {
  require_same(a, b);
  if (a.field_data()->p == 0) return a.rational() < b.rational();
  const auto ra = a.residues();
  const auto rb = b.residues();
  for (std::size_t i = ra.size(); i-- > 0;) {
    if (ra[i] != rb[i]) return ra[i] < rb[i];
  }
  return false;
}

// ------------------------------------------------------------- Embedding

Embedding Embedding::identity(const Field& f) {
  return Embedding(f, f, f.is_finite() && f.degree() > 1 ? f.generator() : f.one());
}

unsigned Embedding::degree() const { return target_.degree() / source_.degree(); }

Scalar Embedding::operator()(const Scalar& x) const {
  if (x.field_data() != source_.data()) {
    throw Error(ErrorCode::FieldMismatch, "embedding applied to a scalar outside its source");
  }
  if (source_ == target_) return x;
  if (!source_.is_finite()) return x;
  if (source_.degree() == 1) {
    Scalar out = target_.zero();
    out.r_[0] = x.r_[0];
    return out;
  }
  // Horner in the image of the generator.
  Scalar acc = target_.zero();
  for (unsigned i = source_.degree(); i-- > 0;) {
    acc *= generator_image_;
    Scalar c = target_.zero();
    c.r_[0] = x.r_[i];
    acc += c;
  }
  return acc;
}

std::pair<Field, Embedding> extend_field(const Field& f, unsigned m) {
  if (m == 0) throw Error(ErrorCode::DegreeUnsupported, "extension degree must be positive");
  if (m == 1) return {f, Embedding::identity(f)};
  if (!f.is_finite()) throw Error(ErrorCode::RationalsNotExtendable, "cannot extend Q by a finite degree");
  const unsigned total = f.degree() * m;
  if (total > kMaxFieldDegree) {
    throw Error(ErrorCode::DegreeUnsupported,
                "GF(" + std::to_string(f.characteristic()) + "^" + std::to_string(total) + ") exceeds degree " +
                    std::to_string(kMaxFieldDegree));
  }
  Field target = make_field(f.characteristic(), static_cast<int>(total));
  if (f.degree() == 1) return {target, Embedding(f, target, target.one())};
  std::vector<Scalar> coeffs;
  for (std::uint32_t c : f.modulus()) coeffs.push_back(target.from_int(c));
  const auto roots = roots_in_field(Poly(target, std::move(coeffs)));
  if (roots.empty()) throw Error(ErrorCode::DegreeUnsupported, "modulus has no root in the extension");
  return {target, Embedding(f, target, roots.front())};
}

}  // namespace nlie
