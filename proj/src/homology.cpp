#include "schur/homology.hpp"

#include <algorithm>
#include <stdexcept>

namespace schur {

ExteriorBasis ExteriorBasis::make(std::size_t n, std::size_t k) {
  ExteriorBasis b;
  b.degree = k;
  if (k > n) return b;
  std::vector<std::size_t> t(k);
  for (std::size_t i = 0; i < k; ++i) t[i] = i;
  while (true) {
    b.tuples.push_back(t);
    std::size_t pos = k;
    while (pos > 0 && t[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++t[pos - 1];
    for (std::size_t j = pos; j < k; ++j) t[j] = t[j - 1] + 1;
  }
  return b;
}

std::size_t ExteriorBasis::index_of(const std::vector<std::size_t>& t) const {
  auto it = std::lower_bound(tuples.begin(), tuples.end(), t);
  if (it == tuples.end() || *it != t) throw std::out_of_range("tuple is not an exterior basis element");
  return static_cast<std::size_t>(it - tuples.begin());
}

Matrix d2_matrix(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const ExteriorBasis pairs = ExteriorBasis::make(n, 2);
  Matrix d(n, pairs.size());
  for (std::size_t col = 0; col < pairs.size(); ++col) {
    const Vector v = L.basis_bracket(pairs.tuples[col][0], pairs.tuples[col][1]);
    for (std::size_t r = 0; r < n; ++r) d(r, col) = v[r];
  }
  return d;
}

Matrix d3_matrix(const LieAlgebra& L) {
  const std::size_t n = L.dim();
  const ExteriorBasis pairs = ExteriorBasis::make(n, 2);
  const ExteriorBasis triples = ExteriorBasis::make(n, 3);
  Matrix d(pairs.size(), triples.size());
  // adds coeff * (v ^ e_w) into column col
  auto wedge_into = [&](std::size_t col, const Rational& coeff, const Vector& v, std::size_t w) {
    for (std::size_t t = 0; t < n; ++t) {
      if (t == w || sgn(v[t]) == 0) continue;
      const Rational c = coeff * v[t];
      if (t < w)
        d(pairs.index_of({t, w}), col) += c;
      else
        d(pairs.index_of({w, t}), col) -= c;
    }
  };
  for (std::size_t col = 0; col < triples.size(); ++col) {
    const auto& tr = triples.tuples[col];
    const std::size_t x = tr[0], y = tr[1], z = tr[2];
    wedge_into(col, Rational(1), L.basis_bracket(x, y), z);
    wedge_into(col, Rational(-1), L.basis_bracket(x, z), y);
    wedge_into(col, Rational(1), L.basis_bracket(y, z), x);
  }
  return d;
}

MultiplierResult multiplier_dim(const LieAlgebra& L) {
  MultiplierResult r;
  r.n = L.dim();
  r.rank_d2 = rank(d2_matrix(L));
  r.rank_d3 = rank(d3_matrix(L));
  const std::size_t pairs = r.n * (r.n > 0 ? r.n - 1 : 0) / 2;
  if (r.rank_d2 + r.rank_d3 > pairs) throw std::logic_error("boundary ranks exceed dim Lambda^2 L");
  r.dim_M = pairs - r.rank_d2 - r.rank_d3;
  return r;
}

}  // namespace schur
