#ifndef SCHUR_EXACTLA_HPP
#define SCHUR_EXACTLA_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace schur {

/// Exact rational scalar. GMP keeps mpq values canonical (lowest terms,
/// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Vector = std::vector<Rational>;

class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

std::string to_string(const Rational& q);
Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t k);
bool is_zero(std::span<const Rational> v);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);
  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  void append_row(std::span<const Rational> v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct RrefResult {
  Matrix form;  // zero rows dropped
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination to reduced row-echelon form. Zero rows are
/// removed from the returned form, so form.rows() == rank.
RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);

class Subspace;

/// Null space {x : m x = 0} as a subspace of Q^cols.
Subspace kernel_basis(const Matrix& m);

/// A subspace of Q^n held as an RREF basis. Immutable once built.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient = 0);
  static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace from_matrix(const Matrix& rows);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<std::size_t> non_pivots() const;
  std::vector<Vector> basis_vectors() const;

  /// Clears the pivot coordinates of v using the basis rows.
  Vector reduce(std::span<const Rational> v) const;
  bool contains(std::span<const Rational> v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  std::size_t ambient_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

/// Coordinates in a quotient B/A for a nested pair A <= B.
///
/// The complement of A in B is the RREF of B's basis reduced modulo A; its
/// pivots avoid A's pivots. When B is the whole space this is the set of unit
/// vectors at the non-pivot columns of A.
class QuotientCoords {
 public:
  QuotientCoords(Subspace sub, const Subspace& super);

  std::size_t dim() const { return complement_.rows(); }
  const Subspace& sub() const { return sub_; }
  /// Complement basis vector k; a lift of the k-th quotient basis element.
  Vector lift(std::size_t k) const { return complement_.row_vector(k); }
  Vector lift(std::span<const Rational> coords) const;
  /// Requires v in super; throws std::domain_error otherwise.
  Vector coords(std::span<const Rational> v) const;

 private:
  Subspace sub_;
  Matrix complement_;
  std::vector<std::size_t> complement_pivots_;
};

}  // namespace schur

#endif
