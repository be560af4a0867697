#include "nlie/fixtures.hpp"

#include <initializer_list>
#include <utility>

#include "nlie/io.hpp"

namespace nlie {

namespace {

using Entry = std::pair<std::initializer_list<std::size_t>, std::initializer_list<std::pair<std::size_t, const char*>>>;

// 1-based args and coordinates.
StructureTensor build(const Field& f, unsigned n, std::size_t d, std::initializer_list<Entry> entries) {
  StructureTensor t(f, n, d);
  for (const auto& [args, value] : entries) {
    IndexTuple idx;
    for (std::size_t i : args) idx.push_back(i - 1);
    Vector v(f, d);
    for (const auto& [k, s] : value) v[k - 1] = f.parse(s);
    t.set(idx, std::move(v));
  }
  return t;
}

struct Curated {
  const char* name;
  const char* branch;
  const char* description;
  const char* json;
};

// Found by tools/fixture_search; see fixtures/MANIFEST.json for the search runs.
const std::vector<Curated> kCurated = {
#include "curated_fixtures.inc"
};

}  // namespace

std::vector<FixtureInfo> fixture_catalog() {
  std::vector<FixtureInfo> out = {
      {"abelian", "DerivedProper", "zero bracket; shape and field from the arguments"},
      {"N5", "DerivedProper", "3-ary, dimension 5, only [e1,e2,e3] = e4"},
      {"A4", "", "simple 3-Lie algebra of dimension 4, [e_i,e_j,e_k] = +-e_l"},
      {"A4-perturbed", "", "A4 with [e2,e3,e4] = e2; violates the Filippov identity"},
      {"staged-triple", "", "non-Filippov 4-ary tensor over GF(4) staging the char-2 distinct triple"},
  };
  for (const auto& c : kCurated) out.push_back({c.name, c.branch, c.description});
  return out;
}

NLieAlgebra fixture(std::string_view name, unsigned arity, std::size_t dim, const std::optional<Field>& field) {
  const Field f = field.value_or(make_field(2));
  if (name == "abelian") return NLieAlgebra::checked(StructureTensor(f, arity, dim));
  if (name == "N5") return NLieAlgebra::checked(build(f, 3, 5, {{{1, 2, 3}, {{4, "1"}}}}));
  if (name == "A4" || name == "A4-perturbed") {
    const bool perturbed = name == "A4-perturbed";
    return NLieAlgebra::checked(build(f, 3, 4,
                                      {{{1, 2, 3}, {{4, "-1"}}},
                                       {{1, 2, 4}, {{3, "1"}}},
                                       {{1, 3, 4}, {{2, "-1"}}},
                                       {{2, 3, 4}, {{perturbed ? 2u : 1u, "1"}}}}));
  }
  if (name == "staged-triple") {
    // H = <e1,e2,e3>; d(e1,e2,e3) = diag(0,0,0,1,g,g+1); [e1,e4,e5,e6] = e1.
    const Field f4 = make_field(2, 2);
    return NLieAlgebra::checked(build(f4, 4, 6,
                                      {{{1, 2, 3, 4}, {{4, "1"}}},
                                       {{1, 2, 3, 5}, {{5, "g"}}},
                                       {{1, 2, 3, 6}, {{6, "g+1"}}},
                                       {{1, 4, 5, 6}, {{1, "1"}}}}));
  }
  for (const auto& c : kCurated) {
    if (name == c.name) return NLieAlgebra::checked(parse_algebra(c.json).tensor());
  }
  throw Error(ErrorCode::UnknownFixture, "no fixture named '" + std::string(name) + "'");
}

}  // namespace nlie
