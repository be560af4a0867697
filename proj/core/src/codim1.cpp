#include "nlie/codim1.hpp"

#include <algorithm>
#include <numeric>

namespace nlie {

std::string_view to_string(Branch b) {
  switch (b) {
    case Branch::DerivedProper: return "DerivedProper";
    case Branch::CartanHyperplane: return "CartanHyperplane";
    case Branch::CartanPlusEigenvector: return "CartanPlusEigenvector";
    case Branch::PairCharNe2: return "PairCharNe2";
    case Branch::PairChar2: return "PairChar2";
    case Branch::TripleCharNe2: return "TripleCharNe2";
  }
  return "?";
}

namespace {

Matrix shifted(const Matrix& d, const Scalar& lambda) { return d - lambda * Matrix::identity(d.field(), d.rows()); }

Vector eigenvector(const Matrix& d, const Scalar& lambda) { return kernel(shifted(d, lambda)).basis_vector(0); }

// Independent u, v with d u = lambda u and d v = lambda v + theta u, taken
// from the lambda component (which must have dimension at least 2).
struct InvariantPair {
  Vector u, v;
  Scalar theta;
};

InvariantPair invariant_pair(const Matrix& d, const Scalar& lambda) {
  const Matrix s = shifted(d, lambda);
  const Subspace k1 = kernel(s);
  const Field& f = d.field();
  if (k1.dim() >= 2) return {k1.basis_vector(0), k1.basis_vector(1), f.zero()};
  const Subspace k2 = kernel(s * s);
  for (const auto& v : k2.basis()) {
    if (!k1.contains(v)) return {s * v, v, f.one()};
  }
  throw Error(ErrorCode::PreconditionUnmet, "eigenvalue " + lambda.to_string() + " has multiplicity 1");
}

ContradictionReport bare_report(std::string kind, std::string conclusion, const NLieAlgebra& b) {
  ContradictionReport r;
  r.kind = std::move(kind);
  r.conclusion = std::move(conclusion);
  r.n = b.arity();
  r.field = b.field();
  return r;
}

struct Step {
  unsigned more = 1;  // extension factor required before retrying
  std::optional<Codim1Result> result;
};

Step run_machine(const NLieAlgebra& b, unsigned total, const Codim1Options& opts) {
  const std::size_t n = b.arity();
  const std::size_t dim = b.dim();
  const Field& f = b.field();
  const unsigned room = opts.max_ext / total;
  CaseTrace trace;
  std::optional<Subspace> s;

  const Subspace derived = derived_algebra(b);
  if (!derived.is_full()) {
    trace.branch = Branch::DerivedProper;
    s = complete_to_codim1(derived);
  } else {
    EngelSearchOptions eo;
    eo.budget = opts.budget;
    eo.seed = opts.seed;
    eo.max_ext = room;
    const CartanReport rep = minimal_engel_cartan(b, eo);
    if (rep.extension_degree > 1) return Step{rep.extension_degree, std::nullopt};
    const Subspace& h = rep.h;
    trace.h = h;
    trace.witness = rep.witness;

    if (h.dim() == n + 1) {
      trace.branch = Branch::CartanHyperplane;
      s = h;
    } else if (h.dim() == n) {
      const CommonWeight cw = common_eigen_weights(b, h, room);
      if (cw.extension_degree > 1) return Step{cw.extension_degree, std::nullopt};
      trace.branch = Branch::CartanPlusEigenvector;
      trace.eigenvalues = cw.alpha;
      trace.u = cw.u;
      s = h + Subspace::span(f, dim, {cw.u});
    } else if (h.dim() + 1 == n) {
      const Derivation der = inner_derivation(b, h.basis());
      const WeightDecomposition w = weight_decomposition(b, der, room);
      if (w.extension_degree > 1) return Step{w.extension_degree, std::nullopt};
      const Matrix& d = w.derivation;
      const WeightComponent* null = w.find(f.zero());
      if (null == nullptr || !(null->space == h)) {
        ContradictionReport r = bare_report("null-component", "the 0-component of d differs from H", b);
        r.h = h;
        r.d = d;
        throw ContradictionError(std::move(r));
      }
      std::vector<Scalar> lambdas;
      for (const auto& c : w.components) {
        if (c.lambda.is_zero()) continue;
        for (std::size_t i = 0; i < c.space.dim(); ++i) lambdas.push_back(c.lambda);
      }
      trace.eigenvalues = lambdas;
      const bool char2 = f.characteristic() == 2;

      std::optional<std::pair<std::size_t, std::size_t>> pair;
      for (std::size_t i = 0; i < lambdas.size() && !pair; ++i) {
        for (std::size_t j = i + 1; j < lambdas.size() && !pair; ++j) {
          if ((lambdas[i] + lambdas[j]).is_zero()) pair = std::make_pair(i, j);
        }
      }
      const bool triple = lambdas.size() == 3 && (lambdas[0] + lambdas[1] + lambdas[2]).is_zero();
      if (pair) {
        const Scalar& alpha = lambdas[pair->first];
        const Scalar& beta = lambdas[pair->second];
        if (!char2) {
          trace.branch = Branch::PairCharNe2;
          trace.u = eigenvector(d, alpha);
          trace.v = eigenvector(d, beta);
        } else {
          trace.branch = Branch::PairChar2;
          InvariantPair p = invariant_pair(d, alpha);
          trace.u = std::move(p.u);
          trace.v = std::move(p.v);
          trace.theta = std::move(p.theta);
        }
      } else if (triple && !char2) {
        trace.branch = Branch::TripleCharNe2;
        if (lambdas[0] == lambdas[1]) {
          InvariantPair p = invariant_pair(d, lambdas[0]);
          trace.u = std::move(p.u);
          trace.v = std::move(p.v);
        } else {
          trace.u = eigenvector(d, lambdas[0]);
          trace.v = eigenvector(d, lambdas[1]);
        }
      } else if (triple) {
        throw ContradictionError(unreachable_triple_check(b, h, d, lambdas, eigenvector(d, lambdas[0]),
                                                          eigenvector(d, lambdas[1]), eigenvector(d, lambdas[2])));
      } else {
        ContradictionReport r =
            bare_report("no-zero-sum", "no pair and no triple of nonzero eigenvalues sums to zero", b);
        r.h = h;
        r.d = d;
        r.eigenvalues = lambdas;
        throw ContradictionError(std::move(r));
      }
      s = h + Subspace::span(f, dim, {*trace.u, *trace.v});
    } else {
      ContradictionReport r = bare_report(
          "engel-bound", "minimal Engel subalgebra of dimension " + std::to_string(h.dim()) + " outside [n-1, n+1]", b);
      r.h = h;
      throw ContradictionError(std::move(r));
    }
  }

  if (s->dim() + 1 != dim || !is_subalgebra(b, *s)) {
    ContradictionReport r = bare_report("verification", "the constructed subspace is not a codimension-1 subalgebra", b);
    r.h = trace.h;
    r.eigenvalues = trace.eigenvalues;
    if (trace.u) r.vectors.push_back(*trace.u);
    if (trace.v) r.vectors.push_back(*trace.v);
    r.s = s;
    throw ContradictionError(std::move(r));
  }
  return Step{1, Codim1Result{f, total, b, *s, std::move(trace)}};
}

}  // namespace

Codim1Result find_codim1(const NLieAlgebra& a, const Codim1Options& opts) {
  if (a.dim() != a.arity() + 2) {
    throw Error(ErrorCode::DimensionMismatch, "dimension " + std::to_string(a.dim()) + " is not arity + 2 = " +
                                                  std::to_string(a.arity() + 2));
  }
  bool valid = a.validity() == Validity::Valid;
  if (a.validity() == Validity::Unchecked) valid = validate(a).valid;
  if (!valid) throw Error(ErrorCode::InvalidAlgebra, "the bracket violates the Filippov identity");

  unsigned total = 1;
  for (;;) {
    const NLieAlgebra b = total == 1 ? a : extend_algebra(a, total).algebra;
    Step st = run_machine(b, total, opts);
    if (st.result) return std::move(*st.result);
    if (total * st.more > opts.max_ext) {
      throw Error(ErrorCode::ExtensionBudgetExceeded, "needs extension degree " + std::to_string(total * st.more) +
                                                          " > " + std::to_string(opts.max_ext));
    }
    total *= st.more;
  }
}

ContradictionReport unreachable_triple_check(const NLieAlgebra& a, const Subspace& h, const Matrix& d,
                                             const std::vector<Scalar>& eigenvalues, const Vector& u,
                                             const Vector& v, const Vector& w) {
  const std::size_t n = a.arity();
  const Field& f = a.field();
  if (f.characteristic() != 2) throw Error(ErrorCode::PreconditionUnmet, "characteristic is not 2");
  if (n <= 3) {
    throw Error(ErrorCode::PreconditionUnmet,
                "n = 2, 3 are excluded: there H is not contained in the derived algebra, so step 1 already applies");
  }
  if (h.dim() + 1 != n) throw Error(ErrorCode::PreconditionUnmet, "H must have dimension n-1");
  if (eigenvalues.size() != 3) throw Error(ErrorCode::PreconditionUnmet, "three eigenvalues expected");
  const Scalar &alpha = eigenvalues[0], &beta = eigenvalues[1], &gamma = eigenvalues[2];
  if (alpha.is_zero() || beta.is_zero() || gamma.is_zero() || alpha == beta || beta == gamma || alpha == gamma ||
      !(alpha + beta + gamma).is_zero()) {
    throw Error(ErrorCode::PreconditionUnmet, "eigenvalues must be distinct, nonzero and sum to zero");
  }
  if (u.is_zero() || v.is_zero() || w.is_zero() || !(d * u == alpha * u) || !(d * v == beta * v) ||
      !(d * w == gamma * w)) {
    throw Error(ErrorCode::PreconditionUnmet, "u, v, w are not eigenvectors for alpha, beta, gamma");
  }

  ContradictionReport r;
  r.kind = "triple-char2";
  r.n = static_cast<unsigned>(n);
  r.field = f;
  r.h = h;
  r.d = d;
  r.eigenvalues = eigenvalues;
  r.vectors = {u, v, w};

  const std::vector<Vector> hb = h.basis();
  std::vector<std::size_t> perm(hb.size());
  std::iota(perm.begin(), perm.end(), 0);
  auto auvw_for = [&](const std::vector<std::size_t>& p) {
    std::vector<Vector> args;
    for (std::size_t i = 0; i + 3 < n; ++i) args.push_back(hb[p[i]]);
    args.push_back(u);
    args.push_back(v);
    args.push_back(w);
    return bracket(a, args);
  };
  std::vector<std::size_t> chosen = perm;
  do {
    if (!auvw_for(perm).is_zero()) {
      r.reordering_found = true;
      chosen = perm;
      break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.ordering = chosen;

  std::vector<Vector> avec;  // a_1 .. a_{n-3}
  for (std::size_t i = 0; i + 3 < n; ++i) avec.push_back(hb[chosen[i]]);
  const Vector& an2 = hb[chosen[n - 3]];
  const Vector& an1 = hb[chosen[n - 2]];
  auto br = [&](std::vector<Vector> tail) {
    std::vector<Vector> args = avec;
    args.insert(args.end(), tail.begin(), tail.end());
    return bracket(a, args);
  };

  r.auvw = br({u, v, w});
  const Vector inner = br({an1, v, w});
  r.p_direct = br({an2, u, inner});

  // x = (a, a_{n-2}, u) acting on each slot of y = (a, a_{n-1}, v, w).
  std::vector<Vector> y = avec;
  y.push_back(an1);
  y.push_back(v);
  y.push_back(w);
  auto dx = [&](const Vector& z) { return br({an2, u, z}); };
  Vector sum(f, a.dim());
  for (std::size_t i = 0; i < y.size(); ++i) {
    std::vector<Vector> yy = y;
    yy[i] = dx(y[i]);
    const Vector term = bracket(a, yy);
    sum += term;
    if (i + 3 >= y.size()) r.listed_terms.push_back(term);
  }
  r.p_expansion = sum;
  r.predicted = alpha * *r.auvw;

  if (!r.reordering_found) {
    r.conclusion = "no ordering of the H basis gives a nonzero [a, u, v, w]";
  } else if (!(*r.p_direct == *r.p_expansion)) {
    r.conclusion = "Filippov identity fails: direct P = " + r.p_direct->to_string() +
                   " but the expansion gives " + r.p_expansion->to_string() + "; a valid algebra cannot reach this case";
  } else {
    r.conclusion = "direct and expanded P agree (" + r.p_direct->to_string() +
                   "), forcing alpha [a, u, v, w] = 0 with [a, u, v, w] nonzero";
  }
  return r;
}

}  // namespace nlie
