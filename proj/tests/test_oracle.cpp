#include <gtest/gtest.h>

#include <set>

#include "nlie/fixtures.hpp"
#include "nlie/io.hpp"
#include "nlie/oracle.hpp"
#include "support/helpers.hpp"
#include "support/naive.hpp"

using namespace nlie;
using namespace testing_support;

namespace {

const Field F2 = make_field(2);

std::vector<Subspace> enumerate_all(std::size_t d, const Field& f) {
  std::vector<Subspace> out;
  enumerate_codim1_subspaces(d, f, [&](const Subspace& s, const Vector&) {
    out.push_back(s);
    return true;
  });
  return out;
}

std::set<std::string> keys(const std::vector<Subspace>& ss) {
  std::set<std::string> out;
  for (const auto& s : ss) out.insert(s.to_string());
  return out;
}

// Naive oracle list as subspaces, for set comparison.
std::vector<Subspace> naive_subalgebras(const NLieAlgebra& a) {
  std::vector<Subspace> out;
  for (const auto& c : naive::codim1_subalgebra_covectors(a.tensor()))
    out.push_back(Subspace::span(a.field(), a.dim(), naive::hyperplane_basis(c)));
  return out;
}

}  // namespace

TEST(EnumerateCodim1, Counts) {
  EXPECT_EQ(enumerate_all(2, F2).size(), 3u);
  EXPECT_EQ(enumerate_all(5, F2).size(), 31u);
  EXPECT_EQ(enumerate_all(2, make_field(3)).size(), 4u);
  EXPECT_EQ(codim1_count(5, F2), 31u);
  EXPECT_EQ(codim1_count(4, make_field(2, 2)), 85u);
}

TEST(EnumerateCodim1, DistinctHyperplanesWithNormalizedCovectors) {
  for (auto [d, f] : std::vector<std::pair<std::size_t, Field>>{{5, F2}, {4, make_field(3)}, {3, make_field(2, 2)},
                                                                 {3, make_field(5)}, {6, F2}}) {
    std::vector<Subspace> all;
    enumerate_codim1_subspaces(d, f, [&](const Subspace& s, const Vector& c) {
      EXPECT_EQ(s.dim(), d - 1);
      EXPECT_TRUE(c[c.leading_index()].is_one());
      for (const auto& b : s.basis()) EXPECT_TRUE(naive::dot(c, b).is_zero());
      all.push_back(s);
      return true;
    });
    const std::uint64_t q = *f.order();
    std::uint64_t qd = 1;
    for (std::size_t i = 0; i < d; ++i) qd *= q;
    EXPECT_EQ(all.size(), (qd - 1) / (q - 1));
    EXPECT_EQ(keys(all).size(), all.size());
  }
}

TEST(EnumerateCodim1, CapAndRationals) {
  try {
    enumerate_codim1_subspaces(5, Field::rationals(), [](const Subspace&, const Vector&) { return true; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
  try {
    enumerate_codim1_subspaces(6, make_field(16411), [](const Subspace&, const Vector&) { return true; });
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::TooLarge);
  }
}

TEST(EnumerateCodim1, StopsWhenTheVisitorSaysSo) {
  int seen = 0;
  enumerate_codim1_subspaces(5, F2, [&](const Subspace&, const Vector&) { return ++seen < 7; });
  EXPECT_EQ(seen, 7);
}

TEST(AllCodim1Subalgebras, AbelianKeepsAll31) {
  EXPECT_EQ(all_codim1_subalgebras(fixture("abelian")).size(), 31u);
}

TEST(AllCodim1Subalgebras, N5KeepsThe15ContainingE4) {
  const auto subs = all_codim1_subalgebras(fixture("N5"));
  const auto naive_subs = naive_subalgebras(fixture("N5"));
  EXPECT_EQ(naive_subs.size(), 15u);
  EXPECT_EQ(keys(subs), keys(naive_subs));
  const Vector e4 = e(F2, 5, 4);
  for (const auto& s : subs) EXPECT_TRUE(s.contains(e4));
}

TEST(AllCodim1Subalgebras, A4RegressionCount) {
  // Over GF(2) the bracket of ker c is spanned by c, so ker c is closed iff c
  // has even weight: 6 + 1 covectors.
  const auto subs = all_codim1_subalgebras(fixture("A4"));
  const auto naive_subs = naive_subalgebras(fixture("A4"));
  EXPECT_EQ(keys(subs), keys(naive_subs));
  EXPECT_EQ(subs.size(), 7u);
}

TEST(AllCodim1Subalgebras, MatchesNaiveOracleOnRandomAlgebras) {
  for (std::uint64_t s = 0; s < 15; ++s) {
    for (const auto& a : {sparse(3, 5, F2, s), sparse(2, 4, make_field(3), s), sparse(3, 4, make_field(2, 2), s)}) {
      EXPECT_EQ(keys(all_codim1_subalgebras(a)), keys(naive_subalgebras(a))) << serialize_algebra(a.tensor());
    }
  }
}

TEST(FilippovRandomCheck, Examples) {
  EXPECT_TRUE(filippov_random_check(fixture("N5"), 1000, 0).holds);
  EXPECT_TRUE(filippov_random_check(fixture("A4"), 1000, 0).holds);
  const NLieAlgebra bad = fixture("A4-perturbed");
  const FilippovCheck c = filippov_random_check(bad, 1000, 0);
  ASSERT_FALSE(c.holds);
  const auto [lhs, rhs] = naive::filippov_sides(bad.tensor(), c.x, c.y);
  EXPECT_FALSE(lhs == rhs);
  EXPECT_TRUE(*c.lhs == lhs);
  EXPECT_TRUE(*c.rhs == rhs);
  EXPECT_TRUE(filippov_random_check(bad, 0, 0).holds);
}

TEST(RandomAlgebra, DensityZeroIsAbelian) {
  GeneratorSpec spec;
  spec.density = 0.0;
  spec.seed = 3;
  EXPECT_TRUE(random_algebra(spec).tensor().is_zero());
}

TEST(RandomAlgebra, SameSeedSameTensor) {
  for (auto strategy : {Strategy::Sparse, Strategy::PerfectFilter}) {
    GeneratorSpec spec;
    spec.strategy = strategy;
    spec.seed = 21;
    EXPECT_TRUE(random_algebra(spec).tensor() == random_algebra(spec).tensor());
    GeneratorSpec other = spec;
    other.seed = 22;
    EXPECT_FALSE(random_algebra(other).tensor() == random_algebra(spec).tensor());
  }
}

TEST(RandomAlgebra, PerfectFilterOutputIsValidAndPerfect) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const NLieAlgebra a = perfect(3, 5, F2, s);
    EXPECT_TRUE(validate(a).valid);
    EXPECT_TRUE(naive::filippov_on_basis(a.tensor()));
    EXPECT_TRUE(derived_algebra(a).is_full());
  }
}

TEST(RandomAlgebra, BudgetExhaustionIsNotFound) {
  GeneratorSpec spec;
  spec.arity = 2;
  spec.dim = 4;
  spec.strategy = Strategy::PerfectFilter;
  spec.budget = 50;
  try {
    random_algebra(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFound);
  }
}

TEST(RandomAlgebra, RejectsBadSpecs) {
  GeneratorSpec spec;
  spec.density = 1.5;
  EXPECT_THROW(random_algebra(spec), Error);
  spec.density = 0.3;
  spec.budget = 0;
  EXPECT_THROW(random_algebra(spec), Error);
  spec.budget = 10;
  spec.strategy = Strategy::Fixture;
  spec.fixture = "no-such-thing";
  try {
    random_algebra(spec);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownFixture);
  }
}

TEST(RandomAlgebra, FixtureStrategyReturnsNamedBuiltIns) {
  GeneratorSpec spec;
  spec.strategy = Strategy::Fixture;
  for (const auto& info : fixture_catalog()) {
    spec.fixture = info.name;
    const NLieAlgebra a = random_algebra(spec);
    EXPECT_TRUE(a.tensor() == fixture(info.name).tensor()) << info.name;
  }
}

TEST(OracleProperties, GeneratorOutputIsAlwaysValid) {
  for (std::uint64_t s = 0; s < 40; ++s) {
    const NLieAlgebra a = sparse(3, 5, make_field(3), s);
    EXPECT_EQ(a.validity(), Validity::Valid);
    EXPECT_TRUE(validate(a).valid);
  }
}
