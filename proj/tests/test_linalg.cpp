#include <gtest/gtest.h>

#include "nlie/linalg.hpp"
#include "nlie/poly.hpp"
#include "nlie/random.hpp"
#include "support/naive.hpp"

using namespace nlie;

namespace {

Matrix mat(const Field& f, std::vector<std::vector<const char*>> rows) {
  Matrix m(f, rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) m(r, c) = f.parse(rows[r][c]);
  return m;
}

Vector vec(const Field& f, std::vector<const char*> xs) {
  Vector v(f, xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) v[i] = f.parse(xs[i]);
  return v;
}

const std::vector<Field>& substrate_fields() {
  static const std::vector<Field> fs = {make_field(2), make_field(2, 2), make_field(3, 2), Field::rationals()};
  return fs;
}

// Random matrix with a random rank deficiency, so kernels are often nontrivial.
Matrix random_low_rank(Rng& rng, const Field& f, std::size_t r, std::size_t c) {
  const std::size_t k = 1 + rng.below(std::min(r, c));
  return random_matrix(rng, f, r, k) * random_matrix(rng, f, k, c);
}

}  // namespace

TEST(Rref, IdentityIsFixed) {
  const Field f = make_field(5);
  const auto r = rref(Matrix::identity(f, 3));
  EXPECT_TRUE(r.reduced == Matrix::identity(f, 3));
  EXPECT_EQ(r.rank, 3u);
}

TEST(Rref, ZeroHasRankZero) {
  const Field f = make_field(2);
  const auto r = rref(Matrix(f, 2, 2));
  EXPECT_TRUE(r.reduced.is_zero());
  EXPECT_EQ(r.rank, 0u);
}

TEST(Rref, AllOnesOverGf2) {
  const Field f = make_field(2);
  const auto r = rref(mat(f, {{"1", "1"}, {"1", "1"}}));
  EXPECT_TRUE(r.reduced == mat(f, {{"1", "1"}, {"0", "0"}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.pivots, std::vector<std::size_t>{0});
}

TEST(Kernel, Examples) {
  const Field f = make_field(2);
  EXPECT_TRUE(kernel(Matrix::identity(f, 4)).is_zero());
  EXPECT_TRUE(kernel(Matrix(f, 4, 4)).is_full());
  const Subspace k = kernel(mat(f, {{"1", "1"}}));
  ASSERT_EQ(k.dim(), 1u);
  EXPECT_TRUE(k.basis_vector(0) == vec(f, {"1", "1"}));
}

TEST(CharPoly, Examples) {
  const Field f = make_field(2);
  EXPECT_TRUE(char_poly(Matrix(f, 3, 3)) == Poly(f, {f.zero(), f.zero(), f.zero(), f.one()}));
  const Poly id = char_poly(Matrix::identity(f, 2));
  EXPECT_TRUE(id == Poly::linear(f.one()) * Poly::linear(f.one()));
  EXPECT_TRUE(id == Poly(f, {f.one(), f.zero(), f.one()}));
  const Matrix companion = mat(f, {{"0", "1"}, {"1", "1"}});
  EXPECT_TRUE(char_poly(companion) == Poly(f, {f.one(), f.one(), f.one()}));
  try {
    char_poly(Matrix(f, 2, 3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NonSquare);
  }
}

TEST(CharPoly, AgreesWithLeibnizExpansion) {
  for (const Field& f : substrate_fields()) {
    Rng rng(8);
    for (int t = 0; t < 60; ++t) {
      const std::size_t n = 1 + rng.below(5);
      const Matrix m = random_matrix(rng, f, n, n);
      EXPECT_EQ(char_poly(m).coeffs(), naive::leibniz_char_poly(m)) << f.to_string();
    }
  }
}

TEST(GeneralizedEigenspace, Examples) {
  const Field f = make_field(2);
  const Matrix diag = mat(f, {{"0", "0", "0"}, {"0", "0", "0"}, {"0", "0", "1"}});
  EXPECT_TRUE(generalized_eigenspace(diag, f.zero(), 3) ==
              Subspace::span(f, 3, {vec(f, {"1", "0", "0"}), vec(f, {"0", "1", "0"})}));
  const Field f4 = make_field(2, 2);
  const Scalar a = f4.parse("g");
  Matrix jordan(f4, 2, 2);
  jordan(0, 0) = a;
  jordan(1, 1) = a;
  jordan(0, 1) = f4.one();
  EXPECT_EQ(generalized_eigenspace(jordan, a, 1).dim(), 1u);
  EXPECT_EQ(generalized_eigenspace(jordan, a, 2).dim(), 2u);
  EXPECT_TRUE(generalized_eigenspace(diag, f.one(), 3) == Subspace::span(f, 3, {vec(f, {"0", "0", "1"})}));
  const Matrix companion = mat(f, {{"0", "1"}, {"1", "1"}});
  EXPECT_TRUE(generalized_eigenspace(companion, f.zero(), 2).is_zero());
  EXPECT_TRUE(generalized_eigenspace(companion, f.one(), 2).is_zero());
}

TEST(CommonEigenvector, ZeroMatrices) {
  const Field f = make_field(2);
  const auto r = common_eigenvector({Matrix(f, 3, 3), Matrix(f, 3, 3)}, 12);
  EXPECT_TRUE(r.field == f);
  EXPECT_EQ(r.extension_degree, 1u);
  EXPECT_TRUE(r.u == naive::unit(f, 3, 0));
  ASSERT_EQ(r.eigenvalues.size(), 2u);
  EXPECT_TRUE(r.eigenvalues[0].is_zero() && r.eigenvalues[1].is_zero());
}

TEST(CommonEigenvector, CompanionOfIrreducibleNeedsGf4) {
  const Field f = make_field(2);
  const Matrix m = mat(f, {{"0", "1"}, {"1", "1"}});
  const auto r = common_eigenvector({m}, 12);
  const Field f4 = make_field(2, 2);
  ASSERT_TRUE(r.field == f4);
  EXPECT_EQ(r.extension_degree, 2u);
  const Scalar g = f4.generator();
  // Independent check: M (1, g) = (g, 1 + g) = g (1, g) because g^2 = g + 1.
  const Vector u = vec(f4, {"1", "g"});
  const Vector mu = vec(f4, {"g", "g+1"});
  EXPECT_TRUE(g * u == mu);
  EXPECT_TRUE(r.u == u);
  EXPECT_TRUE(r.eigenvalues[0] == g);
}

TEST(CommonEigenvector, NonCommutingIsAnError) {
  const Field f = make_field(3);
  try {
    common_eigenvector({mat(f, {{"0", "1"}, {"0", "0"}}), mat(f, {{"0", "0"}, {"1", "0"}})}, 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCommuting);
  }
}

TEST(CommonEigenvector, ExtensionBudgetIsEnforced) {
  const Field f = make_field(2);
  // Companion matrix of x^3 + x + 1 needs degree 3.
  const Matrix m = mat(f, {{"0", "0", "1"}, {"1", "0", "1"}, {"0", "1", "0"}});
  try {
    common_eigenvector({m}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ExtensionBudgetExceeded);
  }
  EXPECT_EQ(common_eigenvector({m}, 3).extension_degree, 3u);
}

TEST(CompleteToCodim1, AppendsStandardVectorsInOrder) {
  const Field f = make_field(2);
  const Subspace s = Subspace::span(f, 5, {naive::unit(f, 5, 3)});
  const Subspace want = Subspace::span(f, 5, {naive::unit(f, 5, 0), naive::unit(f, 5, 1), naive::unit(f, 5, 2),
                                              naive::unit(f, 5, 3)});
  EXPECT_TRUE(complete_to_codim1(s) == want);
  EXPECT_TRUE(complete_to_codim1(want) == want);
  try {
    complete_to_codim1(Subspace::full(f, 5));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::AlreadyFull);
  }
}

TEST(CompleteToCodim1, SkipsDependentVectors) {
  const Field f = make_field(3);
  const Subspace s = Subspace::span(f, 4, {vec(f, {"1", "1", "0", "0"})});
  const Subspace out = complete_to_codim1(s);
  EXPECT_TRUE(out == Subspace::span(f, 4, {vec(f, {"1", "1", "0", "0"}), naive::unit(f, 4, 0), naive::unit(f, 4, 2)}));
}

TEST(LinalgProperties, RrefIsIdempotentAndKernelRankIdentityHolds) {
  for (const Field& f : substrate_fields()) {
    Rng rng(31);
    for (int t = 0; t < 200; ++t) {
      const std::size_t r = 1 + rng.below(6), c = 1 + rng.below(6);
      const Matrix m = t % 2 ? random_matrix(rng, f, r, c) : random_low_rank(rng, f, r, c);
      const auto once = rref(m);
      ASSERT_TRUE(rref(once.reduced).reduced == once.reduced);
      const Subspace k = kernel(m);
      ASSERT_EQ(k.dim() + once.rank, c);
      for (const auto& x : k.basis()) ASSERT_TRUE((m * x).is_zero());
    }
  }
}

TEST(LinalgProperties, CayleyHamilton) {
  for (const Field& f : substrate_fields()) {
    Rng rng(99);
    for (int t = 0; t < 500; ++t) {
      const std::size_t n = 1 + rng.below(6);
      const Matrix m = random_matrix(rng, f, n, n);
      const Poly p = char_poly(m);
      ASSERT_EQ(p.degree(), static_cast<int>(n));
      ASSERT_TRUE(p.leading().is_one());
      ASSERT_TRUE(evaluate(p, m).is_zero()) << f.to_string() << "\n" << m.to_string();
    }
  }
}

TEST(LinalgProperties, GeneralizedEigenspacesDecomposeWhenSplit) {
  for (const Field& f : {make_field(2), make_field(2, 2), make_field(3, 2), make_field(5)}) {
    Rng rng(12);
    int split = 0;
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 1 + rng.below(6);
      const Matrix m = random_matrix(rng, f, n, n);
      const Poly p = char_poly(m);
      auto roots = roots_in_field(p);
      if (static_cast<int>(roots.size()) != p.degree()) continue;
      ++split;
      roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
      Subspace sum = Subspace::zero(f, n);
      std::size_t total = 0;
      for (const auto& l : roots) {
        const Subspace c = generalized_eigenspace(m, l, static_cast<unsigned>(n));
        ASSERT_TRUE(sum.intersect(c).is_zero());
        sum = sum + c;
        total += c.dim();
      }
      ASSERT_EQ(total, n);
      ASSERT_TRUE(sum.is_full());
    }
    EXPECT_GT(split, 20) << f.to_string();
  }
}

TEST(LinalgProperties, CommonEigenvectorOfCommutingPolynomials) {
  // Polynomials in one matrix commute; the output must be an exact common eigenvector.
  for (const Field& f : {make_field(2), make_field(3), make_field(2, 2)}) {
    Rng rng(4);
    for (int t = 0; t < 80; ++t) {
      const std::size_t n = 1 + rng.below(5);
      const Matrix m = random_matrix(rng, f, n, n);
      std::vector<Matrix> ms{m, m * m + Matrix::identity(f, n), random_scalar(rng, f) * m};
      std::optional<CommonEigenvector> got;
      try {
        got = common_eigenvector(ms, 12);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::ExtensionBudgetExceeded);
        continue;
      }
      const CommonEigenvector& r = *got;
      ASSERT_FALSE(r.u.is_zero());
      auto [ext, emb] = extend_field(f, r.extension_degree);
      ASSERT_TRUE(ext == r.field);
      for (std::size_t i = 0; i < ms.size(); ++i) {
        ASSERT_TRUE(ms[i].map(emb) * r.u == r.eigenvalues[i] * r.u);
      }
    }
  }
}

TEST(SubspaceOps, MembershipAndCosets) {
  const Field f = make_field(3);
  Rng rng(2);
  for (int t = 0; t < 100; ++t) {
    std::vector<Vector> gens;
    for (int k = 0; k < 2; ++k) gens.push_back(random_vector(rng, f, 4));
    const Subspace s = Subspace::span(f, 4, gens);
    const auto members = naive::span_members(f, 4, gens);
    for (const auto& v : naive::all_vectors(f, 4)) {
      const bool in = std::find(members.begin(), members.end(), v) != members.end();
      ASSERT_EQ(s.contains(v), in);
      ASSERT_TRUE(s.contains(v - s.reduce(v)));
    }
  }
}
