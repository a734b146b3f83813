#include "schur/lie_core.hpp"

#include <sstream>

namespace schur {

namespace {

std::string describe_violation(const std::array<std::size_t, 3>& t, const Vector& residual) {
  std::ostringstream os;
  os << "Jacobi identity fails on (e" << t[0] + 1 << ", e" << t[1] + 1 << ", e" << t[2] + 1
     << "): residual (";
  for (std::size_t k = 0; k < residual.size(); ++k) os << (k ? ", " : "") << residual[k];
  os << ")";
  return os.str();
}

void axpy(Vector& acc, const Rational& s, const Vector& v) {
  if (sgn(s) == 0) return;
  for (std::size_t k = 0; k < v.size(); ++k) acc[k] += s * v[k];
}

}  // namespace

StructureConstants::StructureConstants(std::size_t dim)
    : dim_(dim), table_(dim * (dim > 0 ? dim - 1 : 0) / 2) {}

std::size_t StructureConstants::index(std::size_t i, std::size_t j) const {
  // offset of row i in the packed upper triangle, then column j
  return i * dim_ - i * (i + 1) / 2 + (j - i - 1);
}

void StructureConstants::set(std::size_t i, std::size_t j, Vector value) {
  if (!(i < j && j < dim_)) throw std::out_of_range("structure constants require i < j < dim");
  if (value.size() != dim_) throw DimensionMismatch("bracket value has wrong length");
  table_[index(i, j)] = is_zero(value) ? Vector{} : std::move(value);
}

const Vector* StructureConstants::entry(std::size_t i, std::size_t j) const {
  const Vector& v = table_[index(i, j)];
  return v.empty() ? nullptr : &v;
}

Vector StructureConstants::get(std::size_t i, std::size_t j) const {
  if (i >= dim_ || j >= dim_) throw std::out_of_range("basis index out of range");
  if (i == j) return zero_vector(dim_);
  const Vector* v = entry(std::min(i, j), std::max(i, j));
  if (!v) return zero_vector(dim_);
  if (i < j) return *v;
  Vector neg = *v;
  for (auto& x : neg) x = -x;
  return neg;
}

JacobiViolation::JacobiViolation(std::array<std::size_t, 3> t, Vector r)
    : std::runtime_error(describe_violation(t, r)), triple(t), residual(std::move(r)) {}

Vector jacobi_residual(const StructureConstants& sc, std::size_t i, std::size_t j, std::size_t k) {
  const std::size_t n = sc.dim();
  Vector acc = zero_vector(n);
  // [[a,b],c] for the three cyclic shifts
  const std::array<std::array<std::size_t, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
  for (const auto& [a, b, c] : cyc) {
    const Vector ab = sc.get(a, b);
    for (std::size_t t = 0; t < n; ++t)
      if (sgn(ab[t]) != 0) axpy(acc, ab[t], sc.get(t, c));
  }
  return acc;
}

LieAlgebra LieAlgebra::validate(std::string name, StructureConstants sc) {
  const std::size_t n = sc.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector r = jacobi_residual(sc, i, j, k);
        if (!is_zero(r)) throw JacobiViolation({i, j, k}, std::move(r));
      }
  return LieAlgebra(std::move(name), std::move(sc));
}

Vector LieAlgebra::bracket(std::span<const Rational> x, std::span<const Rational> y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket operands must have length dim(L)");
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector* c = sc_.entry(i, j);
      if (!c) continue;
      const Rational coeff = x[i] * y[j] - x[j] * y[i];
      axpy(out, coeff, *c);
    }
  return out;
}

bool LieAlgebra::is_abelian() const {
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (sc_.entry(i, j)) return false;
  return true;
}

LieAlgebra LieAlgebra::renamed(std::string name) const { return LieAlgebra(std::move(name), sc_); }

Subspace product_space(const LieAlgebra& L, const Subspace& a, const Subspace& b) {
  const std::size_t n = L.dim();
  if (a.ambient_dim() != n || b.ambient_dim() != n) throw DimensionMismatch("subspaces must live in L");
  Matrix rows(0, n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) rows.append_row(L.bracket(a.basis().row(i), b.basis().row(j)));
  return Subspace::from_matrix(rows);
}

Subspace centralizer_mod(const LieAlgebra& L, const Subspace& base) {
  const std::size_t n = L.dim();
  const QuotientCoords mod(base, Subspace::full(n));
  const std::size_t q = mod.dim();
  // column a holds the quotient coordinates of [e_a, e_b] for every b
  Matrix system(n * q, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const Vector c = mod.coords(L.basis_bracket(a, b));
      for (std::size_t k = 0; k < q; ++k) system(b * q + k, a) = c[k];
    }
  return kernel_basis(system);
}

Subspace center(const LieAlgebra& L) { return centralizer_mod(L, Subspace(L.dim())); }

const Subspace& SeriesProfile::gamma(std::size_t i) const {
  if (i == 0) throw std::out_of_range("lower central series is indexed from 1");
  if (i - 1 < lower.size()) return lower[i - 1];
  return lower.back();
}

SeriesProfile series_profile(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  SeriesProfile p;
  const Subspace whole = Subspace::full(n);
  p.lower.push_back(whole);
  while (p.lower.back().dim() > 0) {
    Subspace next = product_space(L, p.lower.back(), whole);
    if (next.dim() == p.lower.back().dim())
      throw NotNilpotent(L.name() + " is not nilpotent: lower central series stabilizes at dimension " +
                         std::to_string(next.dim()));
    p.lower.push_back(std::move(next));
  }
  p.nilpotency_class = p.lower.size() - 1;
  p.derived_dim = p.gamma_dim(2);
  p.gen_count = n - p.derived_dim;

  p.upper.push_back(Subspace(n));
  while (p.upper.back().dim() < n) {
    Subspace next = centralizer_mod(L, p.upper.back());
    if (next.dim() == p.upper.back().dim())
      throw NotNilpotent(L.name() + " is not nilpotent: upper central series stabilizes");
    p.upper.push_back(std::move(next));
  }
  return p;
}

Quotient quotient_algebra(const LieAlgebra& L, const Subspace& ideal) {
  const std::size_t n = L.dim();
  if (ideal.ambient_dim() != n) throw DimensionMismatch("ideal must live in L");
  if (!ideal.contains(product_space(L, ideal, Subspace::full(n))))
    throw NotAnIdeal("subspace is not an ideal of " + L.name());
  QuotientCoords proj(ideal, Subspace::full(n));
  const std::size_t q = proj.dim();
  StructureConstants sc(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) sc.set(a, b, proj.coords(L.bracket(proj.lift(a), proj.lift(b))));
  std::string name = ideal.dim() == 0 ? L.name() : L.name() + "/I";
  return {LieAlgebra::validate(std::move(name), std::move(sc)), std::move(proj)};
}

std::vector<Vector> minimal_generators(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const Subspace whole = Subspace::full(n);
  const QuotientCoords top(product_space(L, whole, whole), whole);
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < top.dim(); ++k) gens.push_back(top.lift(k));
  return gens;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t na = a.dim();
  const std::size_t n = na + b.dim();
  StructureConstants sc(n);
  for (std::size_t i = 0; i < na; ++i)
    for (std::size_t j = i + 1; j < na; ++j)
      if (const Vector* v = a.structure().entry(i, j)) {
        Vector w = zero_vector(n);
        std::copy(v->begin(), v->end(), w.begin());
        sc.set(i, j, std::move(w));
      }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j)
      if (const Vector* v = b.structure().entry(i, j)) {
        Vector w = zero_vector(n);
        std::copy(v->begin(), v->end(), w.begin() + static_cast<std::ptrdiff_t>(na));
        sc.set(na + i, na + j, std::move(w));
      }
  return LieAlgebra::validate(a.name() + "+" + b.name(), std::move(sc));
}

LieAlgebra abelian_algebra(std::size_t n) {
  return LieAlgebra::validate("abelian:" + std::to_string(n), StructureConstants(n));
}

}  // namespace schur
