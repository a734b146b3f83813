#include "schur/exactla.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t k) {
  Vector v = zero_vector(n);
  v.at(k) = 1;
  return v;
}

bool is_zero(std::span<const Rational> v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    for (long x : r) data_.emplace_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

Vector Matrix::row_vector(std::size_t r) const {
  auto s = row(r);
  return Vector(s.begin(), s.end());
}

void Matrix::append_row(std::span<const Rational> v) {
  if (v.size() != cols_) throw DimensionMismatch("row length does not match column count");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

bool Matrix::is_zero() const { return schur::is_zero(data_); }

RrefResult rref(const Matrix& m) {
  Matrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix form(0, cols);
  for (std::size_t i = 0; i < r; ++i) form.append_row(a.row(i));
  return {std::move(form), r, std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace kernel_basis(const Matrix& m) {
  const auto red = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : red.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = unit_vector(n, free);
    for (std::size_t i = 0; i < red.rank; ++i) v[red.pivots[i]] = -red.form(i, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace::Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

Subspace Subspace::from_matrix(const Matrix& rows) {
  Subspace s(rows.cols());
  auto red = rref(rows);
  s.basis_ = std::move(red.form);
  s.pivots_ = std::move(red.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors) {
  return from_matrix(Matrix::from_rows(vectors, ambient));
}

Subspace Subspace::full(std::size_t ambient) { return from_matrix(Matrix::identity(ambient)); }

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c)
      ++k;
    else
      out.push_back(c);
  }
  return out;
}

std::vector<Vector> Subspace::basis_vectors() const {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < dim(); ++i) out.push_back(basis_.row_vector(i));
  return out;
}

Vector Subspace::reduce(std::span<const Rational> v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Rational f = out[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = pivots_[i]; j < ambient_; ++j) out[j] -= f * basis_(i, j);
  }
  return out;
}

bool Subspace::contains(std::span<const Rational> v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  Matrix stacked = a.basis();
  for (std::size_t i = 0; i < b.dim(); ++i) stacked.append_row(b.basis().row(i));
  return Subspace::from_matrix(stacked);
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  // x = sum s_i a_i = sum t_j b_j  <=>  [A^T | -B^T] (s, t) = 0
  const std::size_t n = a.ambient_dim();
  const std::size_t da = a.dim();
  const std::size_t db = b.dim();
  Matrix system(n, da + db);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t i = 0; i < da; ++i) system(r, i) = a.basis()(i, r);
    for (std::size_t j = 0; j < db; ++j) system(r, da + j) = -b.basis()(j, r);
  }
  const Subspace ker = kernel_basis(system);
  std::vector<Vector> vecs;
  for (std::size_t k = 0; k < ker.dim(); ++k) {
    Vector x = zero_vector(n);
    for (std::size_t i = 0; i < da; ++i) {
      const Rational& s = ker.basis()(k, i);
      if (sgn(s) == 0) continue;
      for (std::size_t c = 0; c < n; ++c) x[c] += s * a.basis()(i, c);
    }
    vecs.push_back(std::move(x));
  }
  return Subspace::span(n, vecs);
}

QuotientCoords::QuotientCoords(Subspace sub, const Subspace& super) : sub_(std::move(sub)) {
  if (sub_.ambient_dim() != super.ambient_dim()) throw DimensionMismatch("ambient dimensions differ");
  if (!super.contains(sub_)) throw std::domain_error("quotient requires sub <= super");
  Matrix reduced(0, super.ambient_dim());
  for (std::size_t i = 0; i < super.dim(); ++i) reduced.append_row(sub_.reduce(super.basis().row(i)));
  auto red = rref(reduced);
  complement_ = std::move(red.form);
  complement_pivots_ = std::move(red.pivots);
}

Vector QuotientCoords::lift(std::span<const Rational> coords) const {
  if (coords.size() != dim()) throw DimensionMismatch("quotient coordinate length mismatch");
  Vector v = zero_vector(sub_.ambient_dim());
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (sgn(coords[k]) == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c) v[c] += coords[k] * complement_(k, c);
  }
  return v;
}

Vector QuotientCoords::coords(std::span<const Rational> v) const {
  const Vector r = sub_.reduce(v);
  Vector out(dim());
  for (std::size_t k = 0; k < dim(); ++k) out[k] = r[complement_pivots_[k]];
  // the remainder must be exactly the combination read off at the pivots
  Vector check = r;
  for (std::size_t k = 0; k < dim(); ++k) {
    if (sgn(out[k]) == 0) continue;
    for (std::size_t c = 0; c < check.size(); ++c) check[c] -= out[k] * complement_(k, c);
  }
  if (!is_zero(check)) throw std::domain_error("vector is not in the quotient's ambient subspace");
  return out;
}

}  // namespace schur
