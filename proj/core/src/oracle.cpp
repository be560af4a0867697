#include "nlie/oracle.hpp"

#include "nlie/fixtures.hpp"
#include "nlie/random.hpp"

namespace nlie {

std::uint64_t codim1_count(std::size_t d, const Field& f) {
  if (!f.is_finite()) throw Error(ErrorCode::TooLarge, "hyperplanes over Q cannot be enumerated");
  const std::uint64_t q = *f.order();
  std::uint64_t total = 0, pw = 1;
  for (std::size_t i = 0; i < d; ++i) {
    total += pw;
    pw *= q;
  }
  return total;
}

void enumerate_codim1_subspaces(std::size_t d, const Field& f,
                                const std::function<bool(const Subspace&, const Vector&)>& visit,
                                std::uint64_t cap) {
  if (!f.is_finite()) throw Error(ErrorCode::TooLarge, "hyperplanes over Q cannot be enumerated");
  if (d == 0) return;
  const std::uint64_t q = *f.order();
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < d; ++i) {
    if (size > cap / q) {
      throw Error(ErrorCode::TooLarge, f.to_string() + "^" + std::to_string(d) + " exceeds the enumeration cap");
    }
    size *= q;
  }
  for (std::size_t lead = 0; lead < d; ++lead) {
    const std::size_t rest = d - lead - 1;
    std::vector<std::uint64_t> digits(rest, 0);
    for (;;) {
      Vector c(f, d);
      c[lead] = f.one();
      for (std::size_t i = 0; i < rest; ++i) c[lead + 1 + i] = f.element(digits[i]);
      // ker c = span{e_j : j < lead} + span{e_j - c_j e_lead : j > lead}
      std::vector<Vector> gens;
      for (std::size_t j = 0; j < d; ++j) {
        if (j == lead) continue;
        Vector g = Vector::unit(f, d, j);
        if (j > lead) g[lead] = -c[j];
        gens.push_back(std::move(g));
      }
      if (!visit(Subspace::span(f, d, gens), c)) return;
      std::size_t i = rest;
      while (i > 0 && digits[i - 1] + 1 == q) digits[--i] = 0;
      if (i == 0) break;
      ++digits[i - 1];
    }
  }
}

std::vector<Subspace> all_codim1_subalgebras(const NLieAlgebra& a, std::uint64_t cap) {
  std::vector<Subspace> out;
  enumerate_codim1_subspaces(
      a.dim(), a.field(),
      [&](const Subspace& s, const Vector&) {
        if (is_subalgebra(a, s)) out.push_back(s);
        return true;
      },
      cap);
  return out;
}

FilippovCheck filippov_random_check(const NLieAlgebra& a, std::uint64_t trials, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = a.arity();
  const std::size_t d = a.dim();
  const Field& f = a.field();
  for (std::uint64_t t = 0; t < trials; ++t) {
    std::vector<Vector> x, y;
    for (std::size_t i = 0; i + 1 < n; ++i) x.push_back(random_vector(rng, f, d));
    for (std::size_t i = 0; i < n; ++i) y.push_back(random_vector(rng, f, d));
    std::vector<Vector> args = x;
    args.push_back(bracket(a, y));
    const Vector lhs = bracket(a, args);
    Vector rhs(f, d);
    for (std::size_t i = 0; i < n; ++i) {
      args.back() = y[i];
      std::vector<Vector> yy = y;
      yy[i] = bracket(a, args);
      rhs += bracket(a, yy);
    }
    if (!(lhs == rhs)) return FilippovCheck{false, t, std::move(x), std::move(y), lhs, rhs};
  }
  return FilippovCheck{};
}

StructureTensor sparse_tensor(unsigned arity, std::size_t dim, const Field& f, double density, Rng& rng) {
  StructureTensor t(f, arity, dim);
  for (const auto& idx : increasing_tuples(dim, arity)) {
    if (rng.chance(density)) t.set(idx, random_vector(rng, f, dim));
  }
  return t;
}

StructureTensor graded_tensor(unsigned arity, std::size_t dim, const Field& f, unsigned rank, double density,
                              Rng& rng) {
  std::vector<Vector> w;
  for (std::size_t j = 0; j < dim; ++j) {
    Vector x(f, rank);
    for (unsigned i = 0; i < rank; ++i) x[i] = rng.chance(0.3) ? f.zero() : random_scalar(rng, f);
    w.push_back(std::move(x));
  }
  StructureTensor t(f, arity, dim);
  for (const auto& idx : increasing_tuples(dim, arity)) {
    Vector sum(f, rank);
    for (std::size_t i : idx) sum += w[i];
    Vector v(f, dim);
    for (std::size_t j = 0; j < dim; ++j) {
      if (!(w[j] == sum) || !rng.chance(density)) continue;
      Scalar c = random_scalar(rng, f);
      while (c.is_zero()) c = random_scalar(rng, f);
      v[j] = c;
    }
    if (!v.is_zero()) t.set(idx, std::move(v));
  }
  return t;
}

NLieAlgebra random_algebra(const GeneratorSpec& spec) {
  if (spec.strategy == Strategy::Fixture) return fixture(spec.fixture, spec.arity, spec.dim, spec.field);
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw Error(ErrorCode::PreconditionUnmet, "density must lie in [0, 1]");
  }
  if (spec.budget < 1) throw Error(ErrorCode::PreconditionUnmet, "budget must be at least 1");
  const unsigned rank = spec.grading.value_or(spec.strategy == Strategy::PerfectFilter ? 2 : 0);
  Rng rng(spec.seed);
  for (std::uint64_t attempt = 0; attempt < spec.budget; ++attempt) {
    NLieAlgebra a = NLieAlgebra::checked(
        rank == 0 ? sparse_tensor(spec.arity, spec.dim, spec.field, spec.density, rng)
                  : graded_tensor(spec.arity, spec.dim, spec.field, rank, spec.density, rng));
    if (a.validity() != Validity::Valid) continue;
    if (spec.strategy == Strategy::PerfectFilter && !derived_algebra(a).is_full()) continue;
    return a;
  }
  throw Error(ErrorCode::NotFound, "no algebra accepted within " + std::to_string(spec.budget) + " attempts");
}

}  // namespace nlie
