#include "nlie/algebra.hpp"

#include <algorithm>
#include <numeric>

namespace nlie {

std::vector<IndexTuple> increasing_tuples(std::size_t n, std::size_t k) {
  std::vector<IndexTuple> out;
  if (k > n) return out;
  IndexTuple t(k);
  std::iota(t.begin(), t.end(), 0);
  for (;;) {
    out.push_back(t);
    std::size_t i = k;
    while (i > 0 && t[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++t[i - 1];
    for (std::size_t j = i; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return out;
}

// ------------------------------------------------------- StructureTensor

StructureTensor::StructureTensor(Field f, unsigned arity, std::size_t dim)
    : field_(f), arity_(arity), dim_(dim) {
  if (arity < 2) throw Error(ErrorCode::ArityMismatch, "arity must be at least 2");
  if (dim < arity) throw Error(ErrorCode::DimensionMismatch, "dimension must be at least the arity");
  binom_.assign(dim + 1, std::vector<std::size_t>(arity + 1, 0));
  for (std::size_t a = 0; a <= dim; ++a) {
    binom_[a][0] = 1;
    for (std::size_t b = 1; b <= std::min<std::size_t>(a, arity); ++b) {
      binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
  }
  values_.assign(binom_[dim][arity], Vector(f, dim));
}

std::size_t StructureTensor::slot(std::span<const std::size_t> sorted) const {
  if (sorted.size() != arity_) throw Error(ErrorCode::ArityMismatch, "index tuple length differs from the arity");
  std::size_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= dim_) throw Error(ErrorCode::IndexOutOfRange, "basis index outside the dimension");
    if (i > 0 && sorted[i] <= sorted[i - 1]) {
      throw Error(ErrorCode::IndexOutOfRange, "index tuple is not strictly increasing");
    }
    r += sorted[i] >= i + 1 ? binom_[sorted[i]][i + 1] : 0;
  }
  return r;
}

const Vector& StructureTensor::value(std::span<const std::size_t> sorted) const { return values_[slot(sorted)]; }

void StructureTensor::set(std::span<const std::size_t> sorted, Vector v) {
  if (!(v.field() == field_)) throw Error(ErrorCode::FieldMismatch, "structure constant field");
  if (v.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "structure constant length");
  values_[slot(sorted)] = std::move(v);
}

Vector StructureTensor::basis_bracket(std::span<const std::size_t> idx) const {
  if (idx.size() != arity_) throw Error(ErrorCode::ArityMismatch, "bracket of the wrong number of arguments");
  std::array<std::size_t, 32> buf{};
  std::copy(idx.begin(), idx.end(), buf.begin());
  // Insertion sort counting transpositions.
  bool odd = false;
  for (std::size_t i = 1; i < idx.size(); ++i) {
    for (std::size_t j = i; j > 0 && buf[j - 1] > buf[j]; --j) {
      std::swap(buf[j - 1], buf[j]);
      odd = !odd;
    }
  }
  for (std::size_t i = 1; i < idx.size(); ++i) {
    if (buf[i] == buf[i - 1]) return Vector(field_, dim_);
  }
  const Vector& v = value(std::span<const std::size_t>(buf.data(), idx.size()));
  if (!odd) return v;
  Vector out = v;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = -out[i];
  return out;
}

std::vector<IndexTuple> StructureTensor::support() const {
  std::vector<IndexTuple> out;
  for (auto& t : increasing_tuples(dim_, arity_)) {
    if (!value(t).is_zero()) out.push_back(std::move(t));
  }
  return out;
}

StructureTensor StructureTensor::map(const Embedding& e) const {
  StructureTensor out(e.target(), arity_, dim_);
  for (std::size_t i = 0; i < values_.size(); ++i) out.values_[i] = values_[i].map(e);
  return out;
}

// ---------------------------------------------------------- NLieAlgebra

NLieAlgebra NLieAlgebra::checked(StructureTensor t) {
  NLieAlgebra a(std::move(t));
  ValidationReport r = validate(a);
  a.validity_ = r.valid ? Validity::Valid : Validity::Invalid;
  a.report_ = std::move(r);
  return a;
}

NLieAlgebra NLieAlgebra::map(const Embedding& e) const {
  NLieAlgebra out(tensor_.map(e));
  out.validity_ = validity_;
  if (validity_ == Validity::Valid) out.report_ = ValidationReport{};
  return out;
}

// --------------------------------------------------------------- bracket

namespace {

// Cofactor expansion along the first column over the rows listed in `rows`.
Scalar cofactor_det(const Matrix& m, std::vector<std::size_t>& rows, std::size_t col) {
  const Field& f = m.field();
  if (rows.size() == 1) return m(rows[0], col);
  Scalar acc = f.zero();
  bool negative = false;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::size_t r = rows[i];
    if (!m(r, col).is_zero()) {
      rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(i));
      Scalar minor = cofactor_det(m, rows, col + 1);
      rows.insert(rows.begin() + static_cast<std::ptrdiff_t>(i), r);
      Scalar term = m(r, col) * minor;
      if (negative) {
        acc -= term;
      } else {
        acc += term;
      }
    }
    negative = !negative;
  }
  return acc;
}

}  // namespace

Scalar determinant(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "determinant of a non-square matrix");
  if (m.rows() == 0) return m.field().one();
  std::vector<std::size_t> rows(m.rows());
  std::iota(rows.begin(), rows.end(), 0);
  return cofactor_det(m, rows, 0);
}

Vector bracket(const StructureTensor& t, std::span<const Vector> xs) {
  const std::size_t n = t.arity();
  const std::size_t d = t.dim();
  const Field& f = t.field();
  if (xs.size() != n) throw Error(ErrorCode::ArityMismatch, "bracket needs exactly arity arguments");
  for (const auto& x : xs) {
    if (!(x.field() == f)) throw Error(ErrorCode::FieldMismatch, "bracket argument field");
    if (x.size() != d) throw Error(ErrorCode::DimensionMismatch, "bracket argument length");
  }
  // Unit-vector multiples: a single basis bracket.
  IndexTuple single(n);
  Scalar coeff = f.one();
  bool all_single = true;
  for (std::size_t j = 0; j < n && all_single; ++j) {
    std::size_t nz = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!xs[j][i].is_zero()) {
        ++nz;
        single[j] = i;
      }
    }
    if (nz == 0) return Vector(f, d);
    if (nz > 1) {
      all_single = false;
    } else {
      coeff *= xs[j][single[j]];
    }
  }
  if (all_single) {
    Vector out = t.basis_bracket(single);
    return coeff.is_one() ? out : coeff * out;
  }
  // General case: sum over stored tuples I of det(x_j[I_i]) [e_I].
  std::vector<bool> used(d, false);
  for (const auto& x : xs) {
    for (std::size_t i = 0; i < d; ++i) {
      if (!x[i].is_zero()) used[i] = true;
    }
  }
  Vector out(f, d);
  Matrix minor(f, n, n);
  for (const auto& idx : increasing_tuples(d, n)) {
    if (!std::all_of(idx.begin(), idx.end(), [&](std::size_t i) { return used[i]; })) continue;
    const Vector& value = t.value(idx);
    if (value.is_zero()) continue;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) minor(r, c) = xs[c][idx[r]];
    }
    const Scalar det = determinant(minor);
    if (!det.is_zero()) out += det * value;
  }
  return out;
}

Vector bracket(const NLieAlgebra& a, std::span<const Vector> xs) { return bracket(a.tensor(), xs); }

// ------------------------------------------------------------- validate

namespace {

// Column j holds [e_x, e_j] for the (n-1)-tuple x.
Matrix basis_derivation(const StructureTensor& t, const IndexTuple& x) {
  const std::size_t d = t.dim();
  Matrix m(t.field(), d, d);
  IndexTuple idx(x);
  idx.push_back(0);
  for (std::size_t j = 0; j < d; ++j) {
    idx.back() = j;
    const Vector col = t.basis_bracket(idx);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return m;
}

}  // namespace

ValidationReport validate(const NLieAlgebra& a) {
  const StructureTensor& t = a.tensor();
  const std::size_t n = t.arity();
  const std::size_t d = t.dim();
  const auto ys = increasing_tuples(d, n);
  for (const auto& x : increasing_tuples(d, n - 1)) {
    const Matrix dx = basis_derivation(t, x);
    for (const auto& y : ys) {
      const Vector lhs = dx * t.value(y);
      Vector rhs(t.field(), d);
      IndexTuple yy = y;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          const Scalar& c = dx(j, y[i]);
          if (c.is_zero()) continue;
          yy[i] = j;
          rhs += c * t.basis_bracket(yy);
        }
        yy[i] = y[i];
      }
      if (!(lhs == rhs)) return ValidationReport{false, x, y, lhs, rhs};
    }
  }
  return ValidationReport{};
}

// ----------------------------------------------------- derived structure

Subspace derived_algebra(const NLieAlgebra& a) {
  std::vector<Vector> vals;
  for (const auto& idx : a.tensor().support()) vals.push_back(a.tensor().value(idx));
  return Subspace::span(a.field(), a.dim(), vals);
}

bool is_subalgebra(const NLieAlgebra& a, const Subspace& s) {
  const std::vector<Vector> basis = s.basis();
  std::vector<Vector> args;
  for (const auto& idx : increasing_tuples(basis.size(), a.arity())) {
    args.clear();
    for (std::size_t i : idx) args.push_back(basis[i]);
    if (!s.contains(bracket(a, args))) return false;
  }
  return true;
}

std::vector<Subspace> lower_central_series(const NLieAlgebra& a) {
  const StructureTensor& t = a.tensor();
  std::vector<Matrix> ds;
  for (const auto& x : increasing_tuples(a.dim(), a.arity() - 1)) ds.push_back(basis_derivation(t, x));
  std::vector<Subspace> series{Subspace::full(a.field(), a.dim())};
  for (;;) {
    const Subspace& cur = series.back();
    std::vector<Vector> gens;
    for (const auto& b : cur.basis()) {
      for (const auto& dm : ds) gens.push_back(dm * b);
    }
    Subspace next = Subspace::span(a.field(), a.dim(), gens);
    const bool stable = next == cur;
    series.push_back(std::move(next));
    if (stable || series.back().is_zero()) break;
  }
  if (series.size() >= 2 && series[series.size() - 1] == series[series.size() - 2] && series.back().is_zero()) {
    series.pop_back();
  }
  return series;
}

bool is_nilpotent(const NLieAlgebra& a) { return lower_central_series(a).back().is_zero(); }

std::optional<NLieAlgebra> restrict_to(const NLieAlgebra& a, const Subspace& s) {
  if (s.dim() < a.arity()) return std::nullopt;
  StructureTensor t(a.field(), a.arity(), s.dim());
  const std::vector<Vector> basis = s.basis();
  std::vector<Vector> args;
  for (const auto& idx : increasing_tuples(basis.size(), a.arity())) {
    args.clear();
    for (std::size_t i : idx) args.push_back(basis[i]);
    const Vector v = bracket(a, args);
    if (!s.contains(v)) throw Error(ErrorCode::PreconditionUnmet, "restriction to a subspace that is not a subalgebra");
    t.set(idx, s.coordinates(v));
  }
  NLieAlgebra out(std::move(t));
  return out;
}

bool is_nilpotent_subalgebra(const NLieAlgebra& a, const Subspace& s) {
  const auto r = restrict_to(a, s);
  return !r || is_nilpotent(*r);
}

bool is_abelian_subspace(const NLieAlgebra& a, const Subspace& s) {
  const std::vector<Vector> basis = s.basis();
  std::vector<Vector> args;
  for (const auto& idx : increasing_tuples(basis.size(), a.arity())) {
    args.clear();
    for (std::size_t i : idx) args.push_back(basis[i]);
    if (!bracket(a, args).is_zero()) return false;
  }
  return true;
}

Subspace normalizer(const NLieAlgebra& a, const Subspace& h) {
  const std::size_t d = a.dim();
  const Field& f = a.field();
  const std::vector<std::size_t> free = h.free_indices();
  // Quotient coordinates: x -> (reduce(x))[free].
  Matrix q(f, free.size(), d);
  for (std::size_t j = 0; j < d; ++j) {
    const Vector r = h.reduce(Vector::unit(f, d, j));
    for (std::size_t i = 0; i < free.size(); ++i) q(i, j) = r[free[i]];
  }
  const std::vector<Vector> basis = h.basis();
  std::vector<Vector> rows;
  for (const auto& idx : increasing_tuples(basis.size(), a.arity() - 1)) {
    std::vector<Vector> tuple;
    for (std::size_t i : idx) tuple.push_back(basis[i]);
    const Matrix qd = q * inner_derivation(a, tuple).matrix;
    for (std::size_t r = 0; r < qd.rows(); ++r) rows.push_back(qd.row(r));
  }
  if (rows.empty()) return Subspace::full(f, d);
  return kernel(Matrix::from_rows(f, d, rows));
}

// ----------------------------------------------------------- derivations

Derivation inner_derivation(const NLieAlgebra& a, const std::vector<Vector>& tuple) {
  if (tuple.size() + 1 != a.arity()) throw Error(ErrorCode::ArityMismatch, "inner derivation needs n-1 vectors");
  const std::size_t d = a.dim();
  const Field& f = a.field();
  for (const auto& v : tuple) {
    if (!(v.field() == f)) throw Error(ErrorCode::FieldMismatch, "derivation tuple field");
  }
  std::vector<Vector> args = tuple;
  args.push_back(Vector(f, d));
  Matrix m(f, d, d);
  for (std::size_t j = 0; j < d; ++j) {
    args.back() = Vector::unit(f, d, j);
    const Vector col = bracket(a, args);
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col[i];
  }
  return Derivation{tuple, std::move(m)};
}

Subspace engel_subalgebra(const NLieAlgebra& a, const std::vector<Vector>& tuple) {
  const Derivation der = inner_derivation(a, tuple);
  return kernel(der.matrix.pow(static_cast<unsigned>(a.dim())));
}

ExtendedAlgebra extend_algebra(const NLieAlgebra& a, unsigned m) {
  auto [field, emb] = extend_field(a.field(), m);
  return ExtendedAlgebra{a.map(emb), emb};
}

}  // namespace nlie
