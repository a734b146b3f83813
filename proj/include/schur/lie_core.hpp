#ifndef SCHUR_LIE_CORE_HPP
#define SCHUR_LIE_CORE_HPP

#include "schur/exactla.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace schur {

/// Bracket table [e_i, e_j] = sum_k c_ij^k e_k, stored for i < j only.
/// Indices are 0-based.
class StructureConstants {
 public:
  explicit StructureConstants(std::size_t dim = 0);

  std::size_t dim() const { return dim_; }
  /// Requires i < j < dim.
  void set(std::size_t i, std::size_t j, Vector value);
  /// Any i, j; antisymmetry and the zero diagonal are applied here.
  Vector get(std::size_t i, std::size_t j) const;
  /// The stored vector for i < j, or nullptr when the pair brackets to zero.
  const Vector* entry(std::size_t i, std::size_t j) const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t dim_;
  std::vector<Vector> table_;  // upper triangle, row-major; empty vector = zero
};

class JacobiViolation : public std::runtime_error {
 public:
  JacobiViolation(std::array<std::size_t, 3> triple, Vector residual);
  std::array<std::size_t, 3> triple;
  Vector residual;
};

class NotNilpotent : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnIdeal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class LieAlgebra {
 public:
  /// Checks the Jacobi identity on every basis triple.
  static LieAlgebra validate(std::string name, StructureConstants sc);

  const std::string& name() const { return name_; }
  std::size_t dim() const { return sc_.dim(); }
  const StructureConstants& structure() const { return sc_; }

  Vector bracket(std::span<const Rational> x, std::span<const Rational> y) const;
  Vector basis_bracket(std::size_t i, std::size_t j) const { return sc_.get(i, j); }
  bool is_abelian() const;

  LieAlgebra renamed(std::string name) const;

  /// Structural equality of tables; names are ignored.
  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.sc_ == b.sc_; }

 private:
  LieAlgebra(std::string name, StructureConstants sc) : name_(std::move(name)), sc_(std::move(sc)) {}

  std::string name_;
  StructureConstants sc_;
};

/// Residual of the Jacobi sum on (e_i, e_j, e_k).
Vector jacobi_residual(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k);

Subspace product_space(const LieAlgebra& L, const Subspace& a, const Subspace& b);
/// {x : [x, L] subset of base}; with base = 0 this is the center.
Subspace centralizer_mod(const LieAlgebra& L, const Subspace& base);
Subspace center(const LieAlgebra& L);

struct SeriesProfile {
  std::vector<Subspace> lower;  // gamma_1 .. gamma_{c+1}; the last entry is 0
  std::vector<Subspace> upper;  // Z_0 .. Z_c; the last entry is L
  std::size_t nilpotency_class = 0;
  std::size_t derived_dim = 0;  // m = dim gamma_2
  std::size_t gen_count = 0;    // n - m

  /// gamma_i for i >= 1; zero beyond the end of the series.
  const Subspace& gamma(std::size_t i) const;
  std::size_t gamma_dim(std::size_t i) const { return gamma(i).dim(); }
};

SeriesProfile series_profile(const LieAlgebra& L);

struct Quotient {
  LieAlgebra algebra;
  QuotientCoords projection;
};

/// L/I on the canonical complement basis. Throws NotAnIdeal unless [L, I] <= I.
Quotient quotient_algebra(const LieAlgebra& L, const Subspace& ideal);

/// Lifts of the canonical basis of L/gamma_2; exactly n - m vectors.
std::vector<Vector> minimal_generators(const LieAlgebra& L);

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);
LieAlgebra abelian_algebra(std::size_t n);

}  // namespace schur

#endif
