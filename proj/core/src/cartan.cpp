#include "nlie/cartan.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "nlie/random.hpp"

namespace nlie {

// ------------------------------------------------------- DerivationBasis

DerivationBasis::DerivationBasis(const NLieAlgebra& a)
    : field_(a.field()), dim_(a.dim()), tuples_(increasing_tuples(a.dim(), a.arity() - 1)) {
  for (const auto& t : tuples_) {
    std::vector<Vector> tuple;
    for (std::size_t i : t) tuple.push_back(Vector::unit(field_, dim_, i));
    mats_.push_back(inner_derivation(a, tuple).matrix);
  }
}

Matrix DerivationBasis::operator()(const std::vector<Vector>& tuple) const {
  const std::size_t k = tuple.size();
  Matrix out(field_, dim_, dim_);
  Matrix minor(field_, k, k);
  for (std::size_t t = 0; t < tuples_.size(); ++t) {
    if (mats_[t].is_zero()) continue;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = 0; c < k; ++c) minor(r, c) = tuple[c][tuples_[t][r]];
    }
    const Scalar det = determinant(minor);
    if (!det.is_zero()) out += det * mats_[t];
  }
  return out;
}

// ------------------------------------------------------------ Engel search

namespace {

struct Candidate {
  Subspace h;
  std::vector<Vector> witness;
};

Subspace fitting_null(const Matrix& d) { return kernel(d.pow(static_cast<unsigned>(d.rows()))); }

// q^e <= cap, without overflow.
bool power_within(std::uint64_t q, std::uint64_t e, std::uint64_t cap) {
  std::uint64_t acc = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (acc > cap / q) return false;
    acc *= q;
  }
  return acc <= cap;
}

// Calls f with the RREF basis of every k-dimensional subspace of F^d, ordered
// by pivot set and then by the enumeration index of the free entries.
template <typename F>
void for_each_subspace(const Field& field, std::size_t d, std::size_t k, F&& f) {
  const std::uint64_t q = *field.order();
  for (const auto& piv : increasing_tuples(d, k)) {
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t c = piv[r] + 1; c < d; ++c) {
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) slots.emplace_back(r, c);
      }
    }
    std::vector<std::uint64_t> digits(slots.size(), 0);
    for (;;) {
      std::vector<Vector> rows;
      for (std::size_t r = 0; r < k; ++r) rows.push_back(Vector::unit(field, d, piv[r]));
      for (std::size_t s = 0; s < slots.size(); ++s) rows[slots[s].first][slots[s].second] = field.element(digits[s]);
      f(rows);
      std::size_t s = slots.size();
      while (s > 0 && digits[s - 1] + 1 == q) digits[--s] = 0;
      if (s == 0) break;
      ++digits[s - 1];
    }
  }
}

struct LevelResult {
  std::vector<Candidate> minimal;  // distinct Engel subalgebras of minimum dimension
  std::size_t min_dim;
  bool exhaustive;
  std::uint64_t examined = 0;
};

LevelResult search_level(const NLieAlgebra& b, const EngelSearchOptions& opts, std::uint64_t seed) {
  const std::size_t d = b.dim();
  const std::size_t k = b.arity() - 1;
  const Field& f = b.field();
  const DerivationBasis der(b);
  LevelResult out{{}, d + 1, false, 0};
  auto consider = [&](std::vector<Vector> tuple) {
    ++out.examined;
    Subspace e = fitting_null(der(tuple));
    if (e.dim() > out.min_dim) return;
    if (e.dim() < out.min_dim) {
      out.min_dim = e.dim();
      out.minimal.clear();
    }
    for (const auto& c : out.minimal) {
      if (c.h == e) return;
    }
    out.minimal.push_back(Candidate{std::move(e), std::move(tuple)});
  };
  if (f.is_finite() && power_within(*f.order(), d * k, opts.exhaustive_cap)) {
    out.exhaustive = true;
    for_each_subspace(f, d, k, consider);
  } else {
    Rng rng(seed);
    for (std::uint64_t i = 0; i < opts.budget; ++i) {
      std::vector<Vector> tuple;
      for (std::size_t j = 0; j < k; ++j) tuple.push_back(random_vector(rng, f, d));
      consider(std::move(tuple));
    }
  }
  return out;
}

}  // namespace

CartanReport minimal_engel_cartan(const NLieAlgebra& a, const EngelSearchOptions& opts) {
  const std::size_t d = a.dim();
  const Field& base = a.field();
  if (is_nilpotent(a)) {
    std::vector<Vector> witness;
    for (std::size_t i = 0; i + 1 < a.arity(); ++i) witness.push_back(Vector::unit(base, d, i));
    return CartanReport{a, 1, Subspace::full(base, d), std::move(witness), true, true, true, 0};
  }
  std::string last_failure;
  for (unsigned m = 1;; m *= 2) {
    const NLieAlgebra b = m == 1 ? a : extend_algebra(a, m).algebra;
    const LevelResult level = search_level(b, opts, opts.seed + m - 1);
    if (level.min_dim < d) {
      for (const auto& c : level.minimal) {
        const bool nil = is_nilpotent_subalgebra(b, c.h);
        const bool sn = nil && normalizer(b, c.h) == c.h;
        if (nil && sn) {
          return CartanReport{b, m, c.h, c.witness, true, true, level.exhaustive, level.examined};
        }
      }
      last_failure = "every Engel subalgebra of minimum dimension " + std::to_string(level.min_dim) + " over " +
                     b.field().to_string() + " fails the nilpotent/self-normalizing check";
    } else {
      last_failure = "no proper Engel subalgebra found over " + b.field().to_string() + " (" +
                     std::to_string(level.examined) + (level.exhaustive ? " subspaces, exhaustive)" : " random tuples)");
    }
    if (!base.is_finite() || m * 2 > opts.max_ext) {
      const bool cartan = level.min_dim < d;
      throw Error(cartan ? ErrorCode::CartanCheckFailed : ErrorCode::BudgetExceeded,
                  last_failure + "; extension limit " + std::to_string(opts.max_ext));
    }
  }
}

// ------------------------------------------------------- weights

const WeightComponent* WeightDecomposition::find(const Scalar& lambda) const {
  for (const auto& c : components) {
    if (c.lambda == lambda) return &c;
  }
  return nullptr;
}

WeightDecomposition weight_decomposition(const NLieAlgebra& a, const Derivation& d, unsigned max_ext) {
  const Field& base = a.field();
  if (!(d.matrix.field() == base)) throw Error(ErrorCode::FieldMismatch, "derivation over a different field");
  const Poly cp = char_poly(d.matrix);
  const unsigned s = splitting_degree(cp);
  if (s > max_ext) {
    throw Error(ErrorCode::ExtensionBudgetExceeded,
                "weight decomposition needs extension degree " + std::to_string(s) + " > " + std::to_string(max_ext));
  }
  auto [field, emb] = extend_field(base, s);
  const Matrix m = d.matrix.map(emb);
  std::vector<Scalar> roots = roots_in_field(map_coefficients(cp, emb));
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  std::sort(roots.begin(), roots.end(), canonical_less);
  WeightDecomposition w{field, s, m, {}};
  for (const auto& r : roots) {
    w.components.push_back(WeightComponent{r, generalized_eigenspace(m, r, static_cast<unsigned>(a.dim()))});
  }
  return w;
}

bool weight_relation_check(const NLieAlgebra& a, const WeightDecomposition& w) {
  const NLieAlgebra b =
      a.field() == w.field ? a : extend_algebra(a, w.extension_degree).algebra;
  if (!(b.field() == w.field)) throw Error(ErrorCode::FieldMismatch, "decomposition over a different field");
  const std::size_t n = b.arity();
  const std::size_t c = w.components.size();
  std::vector<std::vector<Vector>> bases;
  for (const auto& comp : w.components) bases.push_back(comp.space.basis());
  const Subspace zero = Subspace::zero(b.field(), b.dim());

  std::vector<std::size_t> pick(n, 0);  // non-decreasing component indices
  for (;;) {
    Scalar sum = b.field().zero();
    for (std::size_t i : pick) sum += w.components[i].lambda;
    const WeightComponent* target = w.find(sum);
    const Subspace& dest = target ? target->space : zero;

    // Group equal components; each group contributes an increasing subset of its basis.
    std::vector<std::pair<std::size_t, std::size_t>> groups;  // (component, count)
    for (std::size_t i : pick) {
      if (!groups.empty() && groups.back().first == i) {
        ++groups.back().second;
      } else {
        groups.emplace_back(i, 1);
      }
    }
    std::vector<std::vector<IndexTuple>> choices;
    bool empty = false;
    for (auto [comp, cnt] : groups) {
      choices.push_back(increasing_tuples(bases[comp].size(), cnt));
      if (choices.back().empty()) empty = true;
    }
    if (!empty) {
      std::vector<std::size_t> at(groups.size(), 0);
      for (;;) {
        std::vector<Vector> args;
        for (std::size_t g = 0; g < groups.size(); ++g) {
          for (std::size_t i : choices[g][at[g]]) args.push_back(bases[groups[g].first][i]);
        }
        if (!dest.contains(bracket(b, args))) return false;
        std::size_t g = groups.size();
        while (g > 0 && at[g - 1] + 1 == choices[g - 1].size()) at[--g] = 0;
        if (g == 0) break;
        ++at[g - 1];
      }
    }

    std::size_t i = n;
    while (i > 0 && pick[i - 1] + 1 == c) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[i - 1];
  }
  return true;
}

CommonWeight common_eigen_weights(const NLieAlgebra& a, const Subspace& h, unsigned max_ext) {
  const std::size_t d = a.dim();
  const Field& f = a.field();
  if (!is_abelian_subspace(a, h)) throw Error(ErrorCode::NotAbelian, "H has a nonzero n-fold bracket");
  const std::vector<std::size_t> free = h.free_indices();
  if (free.empty()) throw Error(ErrorCode::PreconditionUnmet, "H is the whole algebra");
  const std::vector<Vector> hb = h.basis();
  CommonWeight out{f, 1, Vector::unit(f, d, free.front()), increasing_tuples(hb.size(), a.arity() - 1), {}};
  if (out.tuples.empty()) return out;

  std::vector<Matrix> induced;
  for (const auto& t : out.tuples) {
    std::vector<Vector> tuple;
    for (std::size_t i : t) tuple.push_back(hb[i]);
    const Matrix dm = inner_derivation(a, tuple).matrix;
    Matrix q(f, free.size(), free.size());
    for (std::size_t j = 0; j < free.size(); ++j) {
      const Vector image = h.reduce(dm.column(free[j]));
      for (std::size_t i = 0; i < free.size(); ++i) q(i, j) = image[free[i]];
    }
    induced.push_back(std::move(q));
  }
  CommonEigenvector ce = common_eigenvector(induced, max_ext);
  out.field = ce.field;
  out.extension_degree = ce.extension_degree;
  out.u = Vector(ce.field, d);
  for (std::size_t i = 0; i < free.size(); ++i) out.u[free[i]] = ce.u[i];
  out.alpha = std::move(ce.eigenvalues);
  return out;
}

}  // namespace nlie
