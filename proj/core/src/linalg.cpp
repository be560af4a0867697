#include "nlie/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace nlie {

namespace {

void require_field(const Field& a, const Field& b, const char* what) {
  if (!(a == b)) throw Error(ErrorCode::FieldMismatch, what);
}

}  // namespace

// ---------------------------------------------------------------- Vector

Vector::Vector(Field f, std::size_t n) : field_(f), c_(n, f.zero()) {}

Vector::Vector(Field f, std::vector<Scalar> coords) : field_(f), c_(std::move(coords)) {
  for (const auto& c : c_) {
    if (c.field_data() != field_.data()) throw Error(ErrorCode::FieldMismatch, "vector coordinate field");
  }
}

Vector Vector::unit(const Field& f, std::size_t n, std::size_t i) {
  Vector v(f, n);
  v.c_.at(i) = f.one();
  return v;
}

bool Vector::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::size_t Vector::leading_index() const {
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (!c_[i].is_zero()) return i;
  }
  return c_.size();
}

Vector& Vector::operator+=(const Vector& o) {
  require_field(field_, o.field_, "vector sum");
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector sum");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Vector& Vector::operator-=(const Vector& o) {
  require_field(field_, o.field_, "vector difference");
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "vector difference");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Vector& Vector::operator*=(const Scalar& s) {
  for (auto& c : c_) c *= s;
  return *this;
}

Vector Vector::map(const Embedding& e) const {
  std::vector<Scalar> out;
  out.reserve(c_.size());
  for (const auto& c : c_) out.push_back(e(c));
  return Vector(e.target(), std::move(out));
}

std::string Vector::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ", ";
    out += c_[i].to_string();
  }
  return out + ")";
}

// ---------------------------------------------------------------- Matrix

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols)
    : field_(f), rows_(rows), cols_(cols), a_(rows * cols, f.zero()) {}

Matrix Matrix::identity(const Field& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

Matrix Matrix::from_rows(const Field& f, std::size_t cols, const std::vector<Vector>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    require_field(f, rows[r].field(), "matrix row field");
    if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "matrix row length");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_columns(const Field& f, std::size_t rows, const std::vector<Vector>& cols) {
  Matrix m(f, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) {
    require_field(f, cols[c].field(), "matrix column field");
    if (cols[c].size() != rows) throw Error(ErrorCode::DimensionMismatch, "matrix column length");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  }
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(field_, std::vector<Scalar>(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v(field_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_field(field_, o.field_, "matrix product");
  if (cols_ != o.rows_) throw Error(ErrorCode::DimensionMismatch, "matrix product shapes");
  Matrix out(field_, rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Scalar& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
    }
  }
  return out;
}

Vector Matrix::operator*(const Vector& v) const {
  require_field(field_, v.field(), "matrix-vector product");
  if (cols_ != v.size()) throw Error(ErrorCode::DimensionMismatch, "matrix-vector product shapes");
  Vector out(field_, rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!v[k].is_zero()) out[i] += (*this)(i, k) * v[k];
    }
  }
  return out;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  require_field(field_, o.field_, "matrix sum");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix sum shapes");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  require_field(field_, o.field_, "matrix difference");
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::DimensionMismatch, "matrix difference shapes");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& s) {
  for (auto& x : a_) x *= s;
  return *this;
}

Matrix Matrix::pow(unsigned e) const {
  if (!is_square()) throw Error(ErrorCode::NonSquare, "matrix power");
  Matrix result = identity(field_, rows_);
  Matrix base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::map(const Embedding& e) const {
  Matrix out(e.target(), rows_, cols_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = e(a_[i]);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    if (r) os << ", ";
    os << row(r).to_string();
  }
  os << "]";
  return os.str();
}

// ------------------------------------------------------------------ RREF

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t sel = row;
    while (sel < a.rows() && a(sel, col).is_zero()) ++sel;
    if (sel == a.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(sel, c), a(row, c));
    }
    const Scalar inv = a(row, col).inv();
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || a(r, col).is_zero()) continue;
      const Scalar factor = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= factor * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(a), row, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

// -------------------------------------------------------------- Subspace

Subspace Subspace::zero(const Field& f, std::size_t ambient) { return Subspace(Matrix(f, 0, ambient), {}); }

Subspace Subspace::full(const Field& f, std::size_t ambient) {
  std::vector<std::size_t> piv(ambient);
  for (std::size_t i = 0; i < ambient; ++i) piv[i] = i;
  return Subspace(Matrix::identity(f, ambient), std::move(piv));
}

Subspace Subspace::span(const Field& f, std::size_t ambient, const std::vector<Vector>& vectors) {
  RrefResult r = rref(Matrix::from_rows(f, ambient, vectors));
  Matrix basis(f, r.rank, ambient);
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t c = 0; c < ambient; ++c) basis(i, c) = r.reduced(i, c);
  }
  return Subspace(std::move(basis), std::move(r.pivots));
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
  return out;
}

std::vector<std::size_t> Subspace::free_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient(); ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

Vector Subspace::reduce(const Vector& v) const {
  require_field(field(), v.field(), "subspace reduction");
  if (v.size() != ambient()) throw Error(ErrorCode::DimensionMismatch, "subspace reduction");
  Vector out = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    const Scalar c = out[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t j = pivots_[i]; j < ambient(); ++j) out[j] -= c * basis_(i, j);
  }
  return out;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& s) const {
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (!contains(s.basis_vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  Vector out(field(), dim());
  for (std::size_t i = 0; i < dim(); ++i) out[i] = v[pivots_[i]];
  return out;
}

Subspace Subspace::operator+(const Subspace& o) const {
  require_field(field(), o.field(), "subspace sum");
  std::vector<Vector> all = basis();
  for (auto& v : o.basis()) all.push_back(std::move(v));
  return span(field(), ambient(), all);
}

Subspace Subspace::intersect(const Subspace& o) const {
  require_field(field(), o.field(), "subspace intersection");
  // (a, b) in ker [U^T | W^T]  <=>  sum a_i u_i = -sum b_j w_j.
  std::vector<Vector> cols = basis();
  for (auto& v : o.basis()) cols.push_back(std::move(v));
  if (cols.empty()) return zero(field(), ambient());
  const Subspace k = kernel(Matrix::from_columns(field(), ambient(), cols));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < k.dim(); ++r) {
    Vector x(field(), ambient());
    for (std::size_t i = 0; i < dim(); ++i) x += k.basis_(r, i) * basis_.row(i);
    out.push_back(std::move(x));
  }
  return span(field(), ambient(), out);
}

Subspace Subspace::map(const Embedding& e) const { return Subspace(basis_.map(e), pivots_); }

std::string Subspace::to_string() const {
  std::string out = "span{";
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i) out += ", ";
    out += basis_.row(i).to_string();
  }
  return out + "}";
}

Subspace kernel(const Matrix& m) {
  const RrefResult r = rref(m);
  const Field& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<Vector> vecs;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(f, m.cols());
    x[free] = f.one();
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.reduced(i, free);
    vecs.push_back(std::move(x));
  }
  return Subspace::span(f, m.cols(), vecs);
}

Subspace image(const Matrix& m) {
  std::vector<Vector> cols;
  for (std::size_t c = 0; c < m.cols(); ++c) cols.push_back(m.column(c));
  return Subspace::span(m.field(), m.rows(), cols);
}

// ------------------------------------------------- characteristic polynomial

Poly char_poly(const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "characteristic polynomial of a non-square matrix");
  const Field& f = m.field();
  const std::size_t n = m.rows();
  // v holds the coefficients of the characteristic polynomial of the leading
  // r x r block, highest degree first.
  std::vector<Scalar> v{f.one()};
  for (std::size_t r = 0; r < n; ++r) {
    // Toeplitz column: 1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C.
    std::vector<Scalar> t{f.one(), -m(r, r)};
    std::vector<Scalar> col(r);
    for (std::size_t i = 0; i < r; ++i) col[i] = m(i, r);
    for (std::size_t k = 0; k < r; ++k) {
      Scalar dot = f.zero();
      for (std::size_t i = 0; i < r; ++i) dot += m(r, i) * col[i];
      t.push_back(-dot);
      std::vector<Scalar> next(r, f.zero());
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += m(i, j) * col[j];
      }
      col = std::move(next);
    }
    std::vector<Scalar> w(r + 2, f.zero());
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= std::min(i, r); ++j) w[i] += t[i - j] * v[j];
    }
    v = std::move(w);
  }
  std::reverse(v.begin(), v.end());
  return Poly(f, std::move(v));
}

Matrix evaluate(const Poly& p, const Matrix& m) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "polynomial evaluated at a non-square matrix");
  Matrix acc(m.field(), m.rows(), m.cols());
  const Matrix id = Matrix::identity(m.field(), m.rows());
  for (std::size_t i = p.coeffs().size(); i-- > 0;) acc = acc * m + p.coeffs()[i] * id;
  return acc;
}

Subspace generalized_eigenspace(const Matrix& m, const Scalar& lambda, unsigned e) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, "eigenspace of a non-square matrix");
  Matrix shifted = m - lambda * Matrix::identity(m.field(), m.rows());
  return kernel(shifted.pow(e));
}

// --------------------------------------------------- common eigenvector

CommonEigenvector common_eigenvector(const std::vector<Matrix>& ms, unsigned max_ext) {
  if (ms.empty()) throw Error(ErrorCode::DimensionMismatch, "common eigenvector of an empty family");
  const Field base = ms.front().field();
  const std::size_t d = ms.front().rows();
  for (const auto& m : ms) {
    require_field(base, m.field(), "common eigenvector family");
    if (!m.is_square() || m.rows() != d) throw Error(ErrorCode::NonSquare, "common eigenvector family shapes");
  }
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      if (!(ms[i] * ms[j] == ms[j] * ms[i])) {
        throw Error(ErrorCode::NotCommuting,
                    "matrices " + std::to_string(i) + " and " + std::to_string(j) + " do not commute");
      }
    }
  }
  unsigned total = 1;
  for (;;) {
    auto [field, emb] = extend_field(base, total);
    std::vector<Matrix> cur;
    for (const auto& m : ms) cur.push_back(m.map(emb));
    Subspace v = Subspace::full(field, d);
    std::vector<Scalar> eigenvalues;
    unsigned need = 1;
    for (const auto& m : cur) {
      // Restriction of m to the invariant subspace v, in v's RREF basis.
      const std::vector<Vector> b = v.basis();
      std::vector<Vector> cols;
      for (const auto& bv : b) cols.push_back(v.coordinates(m * bv));
      const Matrix restricted = Matrix::from_columns(field, b.size(), cols);
      const Poly cp = char_poly(restricted);
      const auto roots = roots_in_field(cp);
      if (roots.empty()) {
        need = splitting_degree(cp);
        break;
      }
      const Scalar& lambda = roots.front();
      const Subspace k = generalized_eigenspace(restricted, lambda, 1);
      std::vector<Vector> lifted;
      for (std::size_t r = 0; r < k.dim(); ++r) {
        Vector x(field, d);
        for (std::size_t i = 0; i < b.size(); ++i) x += k.basis_matrix()(r, i) * b[i];
        lifted.push_back(std::move(x));
      }
      v = Subspace::span(field, d, lifted);
      eigenvalues.push_back(lambda);
    }
    if (need == 1) {
      return {field, total, v.basis_vector(0), std::move(eigenvalues)};
    }
    if (total * need > max_ext) {
      throw Error(ErrorCode::ExtensionBudgetExceeded,
                  "common eigenvector needs extension degree " + std::to_string(total * need) + " > " +
                      std::to_string(max_ext));
    }
    total *= need;
  }
}

Subspace complete_to_codim1(const Subspace& s) {
  const std::size_t d = s.ambient();
  if (s.dim() == d) throw Error(ErrorCode::AlreadyFull, "subspace already equals the ambient space");
  Subspace out = s;
  for (std::size_t i = 0; i < d && out.dim() + 1 < d; ++i) {
    const Vector e = Vector::unit(s.field(), d, i);
    if (!out.contains(e)) out = out + Subspace::span(s.field(), d, {e});
  }
  return out;
}

}  // namespace nlie
