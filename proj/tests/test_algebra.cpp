#include <gtest/gtest.h>

#include "nlie/algebra.hpp"
#include "nlie/cartan.hpp"
#include "nlie/fixtures.hpp"
#include "nlie/oracle.hpp"
#include "nlie/poly.hpp"
#include "support/helpers.hpp"
#include "support/naive.hpp"

using namespace nlie;
using namespace testing_support;

namespace {

const Field F2 = make_field(2);

std::vector<NLieAlgebra> corpus() {
  std::vector<NLieAlgebra> out;
  for (std::uint64_t s = 0; s < 12; ++s) out.push_back(sparse(3, 5, F2, s));
  for (std::uint64_t s = 0; s < 4; ++s) out.push_back(perfect(3, 5, F2, s));
  for (std::uint64_t s = 0; s < 6; ++s) out.push_back(sparse(2, 4, make_field(3), s));
  for (std::uint64_t s = 0; s < 6; ++s) out.push_back(sparse(3, 5, make_field(2, 2), s));
  for (std::uint64_t s = 0; s < 4; ++s) out.push_back(sparse(4, 6, F2, s));
  out.push_back(fixture("A4"));
  out.push_back(fixture("N5"));
  out.push_back(fixture("pair-char2-gf2"));
  return out;
}

}  // namespace

TEST(Bracket, Examples) {
  const NLieAlgebra n5 = fixture("N5");
  const std::vector<Vector> xs{e(F2, 5, 1), e(F2, 5, 2), e(F2, 5, 3)};
  EXPECT_TRUE(bracket(n5, xs) == e(F2, 5, 4));
  const std::vector<Vector> rep{e(F2, 5, 1), e(F2, 5, 1), e(F2, 5, 3)};
  EXPECT_TRUE(bracket(n5, rep).is_zero());

  const Field f5 = make_field(5);
  const NLieAlgebra a4 = fixture("A4", 3, 4, f5);
  const std::vector<Vector> ab{e(f5, 4, 1), e(f5, 4, 2), e(f5, 4, 3)};
  const std::vector<Vector> ba{e(f5, 4, 2), e(f5, 4, 1), e(f5, 4, 3)};
  EXPECT_TRUE(bracket(a4, ba) == f5.from_int(-1) * bracket(a4, ab));
  EXPECT_TRUE(bracket(a4, ab) == f5.from_int(-1) * e(f5, 4, 4));
}

TEST(Bracket, RejectsWrongArityAndField) {
  const NLieAlgebra n5 = fixture("N5");
  const std::vector<Vector> two{e(F2, 5, 1), e(F2, 5, 2)};
  try {
    bracket(n5, two);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ArityMismatch);
  }
  const Field f3 = make_field(3);
  const std::vector<Vector> other{e(f3, 5, 1), e(f3, 5, 2), e(f3, 5, 3)};
  try {
    bracket(n5, other);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::FieldMismatch);
  }
}

TEST(Validate, AbelianAndN5AreValid) {
  EXPECT_TRUE(validate(fixture("abelian")).valid);
  EXPECT_TRUE(validate(fixture("N5")).valid);
  EXPECT_TRUE(naive::filippov_on_basis(fixture("N5").tensor()));
}

TEST(Validate, PerturbedA4WitnessMatchesDirectExpansion) {
  const NLieAlgebra bad = fixture("A4-perturbed");
  const ValidationReport r = validate(bad);
  ASSERT_FALSE(r.valid);
  ASSERT_EQ(r.x.size(), 2u);
  ASSERT_EQ(r.y.size(), 3u);
  std::vector<Vector> x, y;
  for (auto i : r.x) x.push_back(Vector::unit(F2, 4, i));
  for (auto i : r.y) y.push_back(Vector::unit(F2, 4, i));
  const auto [lhs, rhs] = naive::filippov_sides(bad.tensor(), x, y);
  EXPECT_FALSE(lhs == rhs);
  EXPECT_TRUE(*r.lhs == lhs);
  EXPECT_TRUE(*r.rhs == rhs);
  EXPECT_FALSE(naive::filippov_on_basis(bad.tensor()));
  EXPECT_TRUE(naive::filippov_on_basis(fixture("A4").tensor()));
  EXPECT_EQ(bad.validity(), Validity::Invalid);
}

TEST(DerivedAlgebra, Examples) {
  EXPECT_TRUE(derived_algebra(fixture("abelian")).is_zero());
  EXPECT_TRUE(derived_algebra(fixture("N5")) == span_units(F2, 5, {4}));
  EXPECT_TRUE(derived_algebra(fixture("A4")).is_full());
}

TEST(IsSubalgebra, Examples) {
  const NLieAlgebra a4 = fixture("A4");
  EXPECT_TRUE(is_subalgebra(a4, Subspace::full(F2, 4)));
  EXPECT_TRUE(is_subalgebra(a4, span_units(F2, 4, {1, 3})));
  EXPECT_FALSE(is_subalgebra(a4, span_units(F2, 4, {1, 2, 3})));
}

TEST(LowerCentralSeries, Examples) {
  auto ab = lower_central_series(fixture("abelian"));
  ASSERT_EQ(ab.size(), 2u);
  EXPECT_TRUE(ab[0].is_full());
  EXPECT_TRUE(ab[1].is_zero());
  EXPECT_TRUE(is_nilpotent(fixture("abelian")));

  auto n5 = lower_central_series(fixture("N5"));
  ASSERT_EQ(n5.size(), 3u);
  EXPECT_TRUE(n5[1] == span_units(F2, 5, {4}));
  EXPECT_TRUE(n5[2].is_zero());
  EXPECT_TRUE(is_nilpotent(fixture("N5")));

  auto a4 = lower_central_series(fixture("A4"));
  ASSERT_EQ(a4.size(), 2u);
  EXPECT_TRUE(a4[0].is_full() && a4[1].is_full());
  EXPECT_FALSE(is_nilpotent(fixture("A4")));
}

TEST(InnerDerivation, Examples) {
  const Field f3 = make_field(3);
  const NLieAlgebra ab = fixture("abelian", 3, 5, f3);
  EXPECT_TRUE(inner_derivation(ab, {vec(f3, {"1", "2", "0", "1", "1"}), e(f3, 5, 2)}).matrix.is_zero());
  const NLieAlgebra a4 = fixture("A4");
  EXPECT_TRUE(inner_derivation(a4, {e(F2, 4, 3), e(F2, 4, 3)}).matrix.is_zero());
  const Matrix d = inner_derivation(a4, {e(F2, 4, 1), e(F2, 4, 2)}).matrix;
  Matrix want(F2, 4, 4);
  want(3, 2) = F2.one();
  want(2, 3) = F2.one();
  EXPECT_TRUE(d == want);
}

TEST(EngelSubalgebra, Examples) {
  const Field f3 = make_field(3);
  EXPECT_TRUE(engel_subalgebra(fixture("abelian", 3, 5, f3), {e(f3, 5, 1), e(f3, 5, 4)}).is_full());

  // N5: d(e1,e2) sends e3 to e4 and is nilpotent; the naive kernel of d^5 is everything.
  const NLieAlgebra n5 = fixture("N5");
  const std::vector<Vector> t{e(F2, 5, 1), e(F2, 5, 2)};
  EXPECT_TRUE(engel_subalgebra(n5, t).is_full());
  EXPECT_EQ(naive::stable_kernel_members(naive::derivation(n5.tensor(), t), F2).size(), 32u);

  // A4: d(e1,e2) swaps e3, e4, so d^2 is the identity on that block.
  const NLieAlgebra a4 = fixture("A4");
  const std::vector<Vector> w{e(F2, 4, 1), e(F2, 4, 2)};
  const Subspace h = engel_subalgebra(a4, w);
  EXPECT_TRUE(h == span_units(F2, 4, {1, 2}));
  const auto members = naive::stable_kernel_members(naive::derivation(a4.tensor(), w), F2);
  EXPECT_EQ(members.size(), 4u);
  for (const auto& m : members) EXPECT_TRUE(h.contains(m));
}

TEST(MinimalEngelCartan, Examples) {
  const CartanReport ab = minimal_engel_cartan(fixture("abelian"));
  EXPECT_TRUE(ab.h.is_full());
  const CartanReport n5 = minimal_engel_cartan(fixture("N5"));
  EXPECT_TRUE(n5.h.is_full());

  const NLieAlgebra a4 = fixture("A4");
  const CartanReport r = minimal_engel_cartan(a4);
  EXPECT_EQ(r.extension_degree, 1u);
  EXPECT_TRUE(r.h == span_units(F2, 4, {1, 2}));
  ASSERT_EQ(r.witness.size(), 2u);
  EXPECT_TRUE(Subspace::span(F2, 4, r.witness) == span_units(F2, 4, {1, 2}));
  EXPECT_TRUE(r.nilpotent && r.self_normalizing && r.exhaustive);

  // Every pair of vectors of GF(2)^4: no Engel subalgebra smaller than 2.
  const auto all = naive::all_vectors(F2, 4);
  std::size_t smallest = 4;
  for (const auto& x : all) {
    for (const auto& y : all) {
      const auto members = naive::stable_kernel_members(naive::derivation(a4.tensor(), {x, y}), F2);
      std::size_t dim = 0;
      while ((std::size_t{1} << dim) < members.size()) ++dim;
      smallest = std::min(smallest, dim);
    }
  }
  EXPECT_EQ(smallest, 2u);
}

TEST(MinimalEngelCartan, RandomModeIsSeededAndDeterministic) {
  const NLieAlgebra a = fixture("pair-char2-gf4");
  EngelSearchOptions o;
  o.exhaustive_cap = 1;
  o.seed = 9;
  const CartanReport r1 = minimal_engel_cartan(a, o);
  const CartanReport r2 = minimal_engel_cartan(a, o);
  EXPECT_FALSE(r1.exhaustive);
  EXPECT_TRUE(r1.h == r2.h);
  EXPECT_TRUE(r1.witness == r2.witness);
  EXPECT_TRUE(engel_subalgebra(r1.algebra, r1.witness) == r1.h);
}

TEST(WeightDecomposition, Examples) {
  const Field f4 = make_field(2, 2);
  const NLieAlgebra ab = fixture("abelian", 3, 4, f4);
  const Derivation zero = inner_derivation(ab, {e(f4, 4, 1), e(f4, 4, 2)});
  const WeightDecomposition wz = weight_decomposition(ab, zero, 12);
  ASSERT_EQ(wz.components.size(), 1u);
  EXPECT_TRUE(wz.components[0].lambda.is_zero());
  EXPECT_TRUE(wz.components[0].space.is_full());

  const NLieAlgebra a4 = fixture("A4");
  const WeightDecomposition w = weight_decomposition(a4, inner_derivation(a4, {e(F2, 4, 1), e(F2, 4, 2)}), 12);
  ASSERT_EQ(w.components.size(), 2u);
  EXPECT_TRUE(w.components[0].lambda.is_zero());
  EXPECT_TRUE(w.components[0].space == span_units(F2, 4, {1, 2}));
  EXPECT_TRUE(w.components[1].lambda.is_one());
  EXPECT_TRUE(w.components[1].space == span_units(F2, 4, {3, 4}));

  // A hand-made diagonal derivation diag(0, 0, g, g + 1).
  Derivation diag{{}, Matrix(f4, 4, 4)};
  diag.matrix(2, 2) = f4.parse("g");
  diag.matrix(3, 3) = f4.parse("g+1");
  const WeightDecomposition wd = weight_decomposition(ab, diag, 12);
  ASSERT_EQ(wd.components.size(), 3u);
  EXPECT_TRUE(wd.find(f4.zero())->space == span_units(f4, 4, {1, 2}));
  EXPECT_TRUE(wd.find(f4.parse("g"))->space == span_units(f4, 4, {3}));
  EXPECT_TRUE(wd.find(f4.parse("g+1"))->space == span_units(f4, 4, {4}));
}

TEST(WeightDecomposition, ExtendsWhenTheSpectrumDoesNotSplit) {
  // Over GF(2), d(e1,e2) on N5-like [e1,e2,e3] = e4, [e1,e2,e4] = e3 + e4 has x^2 + x + 1 on <e3,e4>.
  StructureTensor t(F2, 3, 4);
  t.set(IndexTuple{0, 1, 2}, e(F2, 4, 4));
  t.set(IndexTuple{0, 1, 3}, e(F2, 4, 3) + e(F2, 4, 4));
  const NLieAlgebra a(t);
  const Derivation d = inner_derivation(a, {e(F2, 4, 1), e(F2, 4, 2)});
  const WeightDecomposition w = weight_decomposition(a, d, 12);
  EXPECT_EQ(w.extension_degree, 2u);
  EXPECT_TRUE(w.field == make_field(2, 2));
  EXPECT_EQ(w.components.size(), 3u);
  try {
    weight_decomposition(a, d, 1);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::ExtensionBudgetExceeded);
  }
}

TEST(WeightRelationCheck, Examples) {
  const NLieAlgebra ab = fixture("abelian");
  EXPECT_TRUE(weight_relation_check(ab, weight_decomposition(ab, inner_derivation(ab, {e(F2, 5, 1), e(F2, 5, 2)}), 12)));

  const NLieAlgebra a4 = fixture("A4");
  const WeightDecomposition w = weight_decomposition(a4, inner_derivation(a4, {e(F2, 4, 1), e(F2, 4, 2)}), 12);
  EXPECT_TRUE(weight_relation_check(a4, w));

  // Negative control: move e2 out of the 0-component. Then [e2, e3, e4] = e1 would
  // have to lie in the 1-component.
  WeightDecomposition bad = w;
  bad.components[0].space = span_units(F2, 4, {1});
  bad.components[1].space = span_units(F2, 4, {2, 3, 4});
  EXPECT_FALSE(weight_relation_check(a4, bad));
}

TEST(CommonEigenWeights, AbelianGivesFirstVectorOutsideH) {
  const Field f3 = make_field(3);
  const NLieAlgebra ab = fixture("abelian", 3, 5, f3);
  const CommonWeight c = common_eigen_weights(ab, span_units(f3, 5, {1, 2}), 12);
  EXPECT_TRUE(c.u == e(f3, 5, 3));
  for (const auto& a : c.alpha) EXPECT_TRUE(a.is_zero());
}

TEST(CommonEigenWeights, A4QuotientEigenvector) {
  const NLieAlgebra a4 = fixture("A4");
  const Subspace h = span_units(F2, 4, {1, 2});
  const CommonWeight c = common_eigen_weights(a4, h, 12);
  EXPECT_EQ(c.extension_degree, 1u);
  EXPECT_TRUE(c.u == vec(F2, {"0", "0", "1", "1"}));
  ASSERT_EQ(c.alpha.size(), 1u);
  EXPECT_TRUE(c.alpha[0].is_one());
  // Direct evaluation: d(e1,e2)(e3+e4) = e4+e3.
  const std::vector<Vector> args{e(F2, 4, 1), e(F2, 4, 2), c.u};
  EXPECT_TRUE(naive::bracket(a4.tensor(), args) == c.u);
}

TEST(CommonEigenWeights, NonAbelianIsAnError) {
  try {
    common_eigen_weights(fixture("N5"), span_units(F2, 5, {1, 2, 3}), 12);
    FAIL();
  } catch (const Error& err) {
    EXPECT_EQ(err.code(), ErrorCode::NotAbelian);
  }
}

TEST(ExtendAlgebra, PreservesBracketsUnderTheEmbedding) {
  const NLieAlgebra a = sparse(3, 5, make_field(3), 4);
  const auto ext = extend_algebra(a, 2);
  EXPECT_TRUE(ext.algebra.field() == make_field(3, 2));
  EXPECT_EQ(ext.algebra.validity(), a.validity());
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    std::vector<Vector> xs, ys;
    for (int k = 0; k < 3; ++k) {
      xs.push_back(random_vector(rng, a.field(), 5));
      ys.push_back(xs.back().map(ext.embedding));
    }
    EXPECT_TRUE(bracket(a, xs).map(ext.embedding) == bracket(ext.algebra, ys));
  }
}

TEST(NlieCoreProperties, BracketAgreesWithFullExpansionAndAlternates) {
  for (const auto& a : corpus()) {
    Rng rng(77);
    const std::size_t n = a.arity();
    for (int t = 0; t < 20; ++t) {
      std::vector<Vector> xs;
      for (std::size_t k = 0; k < n; ++k) xs.push_back(random_vector(rng, a.field(), a.dim()));
      const Vector b = bracket(a, xs);
      ASSERT_TRUE(b == naive::bracket(a.tensor(), xs));
      const std::size_t i = rng.below(n - 1);
      auto swapped = xs;
      std::swap(swapped[i], swapped[i + 1]);
      ASSERT_TRUE(bracket(a, swapped) == a.field().from_int(-1) * b);
      auto repeated = xs;
      repeated[i + 1] = repeated[i];
      ASSERT_TRUE(bracket(a, repeated).is_zero());
    }
  }
}

TEST(NlieCoreProperties, BasisSufficiencyOfValidate) {
  for (const auto& a : corpus()) {
    ASSERT_TRUE(validate(a).valid);
    ASSERT_TRUE(filippov_random_check(a, 1000, 3).holds);
    if (auto bad = perturbed(a, 5)) {
      ASSERT_FALSE(validate(*bad).valid);
      ASSERT_FALSE(filippov_random_check(*bad, 1000, 3).holds);
    }
  }
}

TEST(NlieCoreProperties, ValidateMatchesNaiveBasisCheck) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const NLieAlgebra a = sparse(3, 4, make_field(3), s);
    EXPECT_TRUE(naive::filippov_on_basis(a.tensor()));
    if (auto bad = perturbed(a, s)) EXPECT_FALSE(naive::filippov_on_basis(bad->tensor()));
  }
}

TEST(NlieCoreProperties, DerivedAlgebraIsAnIdeal) {
  for (const auto& a : corpus()) {
    const Subspace der = derived_algebra(a);
    for (const auto& idx : increasing_tuples(a.dim(), a.arity() - 1)) {
      for (const auto& w : der.basis()) {
        std::vector<Vector> args;
        for (auto i : idx) args.push_back(Vector::unit(a.field(), a.dim(), i));
        args.push_back(w);
        ASSERT_TRUE(der.contains(bracket(a, args)));
      }
    }
  }
}

TEST(NlieCoreProperties, EngelSubalgebrasAndWeightComponents) {
  for (const auto& a : corpus()) {
    Rng rng(13);
    const std::size_t n = a.arity();
    for (int t = 0; t < 8; ++t) {
      std::vector<Vector> tuple;
      for (std::size_t k = 0; k + 1 < n; ++k) tuple.push_back(random_vector(rng, a.field(), a.dim()));
      const Subspace h = engel_subalgebra(a, tuple);
      ASSERT_TRUE(h.contains(Subspace::span(a.field(), a.dim(), tuple)));
      ASSERT_TRUE(is_subalgebra(a, h));
      if (!h.is_full()) {
        ASSERT_GE(h.dim(), n - 1);
      }
      const Derivation d = inner_derivation(a, tuple);
      const WeightDecomposition w = weight_decomposition(a, d, 12);
      auto [ext, emb] = extend_field(a.field(), w.extension_degree);
      const WeightComponent* zero = w.find(ext.zero());
      ASSERT_NE(zero, nullptr);
      ASSERT_TRUE(zero->space == h.map(emb));
      std::size_t total = 0;
      for (const auto& c : w.components) total += c.space.dim();
      ASSERT_EQ(total, a.dim());
      ASSERT_TRUE(weight_relation_check(a, w));
    }
  }
}

TEST(NlieCoreProperties, EngelBoundInTheTheoremRegime) {
  for (const auto& a : corpus()) {
    if (a.dim() != a.arity() + 2 || !derived_algebra(a).is_full()) continue;
    const CartanReport r = minimal_engel_cartan(a);
    EXPECT_GE(r.h.dim(), a.arity() - 1);
    EXPECT_LE(r.h.dim(), a.arity() + 1);
    EXPECT_TRUE(r.nilpotent && r.self_normalizing);
    EXPECT_TRUE(engel_subalgebra(r.algebra, r.witness) == r.h);
  }
}

TEST(NlieCoreProperties, NormalizerOfCartanIsItself) {
  for (const auto& a : corpus()) {
    if (is_nilpotent(a)) continue;
    const CartanReport r = minimal_engel_cartan(a);
    EXPECT_TRUE(normalizer(r.algebra, r.h) == r.h);
    EXPECT_TRUE(is_nilpotent_subalgebra(r.algebra, r.h));
  }
}
