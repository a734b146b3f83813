#ifndef SCHUR_HOMOLOGY_HPP
#define SCHUR_HOMOLOGY_HPP

#include "schur/exactla.hpp"
#include "schur/lie_core.hpp"

#include <cstddef>
#include <vector>

namespace schur {

/// Index tuples i_1 < ... < i_k over 0..n-1 in lexicographic order.
struct ExteriorBasis {
  std::size_t degree = 0;
  std::vector<std::vector<std::size_t>> tuples;

  static ExteriorBasis make(std::size_t n, std::size_t k);
  std::size_t size() const { return tuples.size(); }
  /// Position of a strictly increasing tuple.
  std::size_t index_of(const std::vector<std::size_t>& t) const;
};

/// Matrix of d2: Lambda^2 L -> L, e_i ^ e_j -> [e_i, e_j]. Columns follow
/// ExteriorBasis::make(n, 2), rows are coordinates in L.
Matrix d2_matrix(const LieAlgebra& L);

/// Matrix of d3: Lambda^3 L -> Lambda^2 L,
///   x ^ y ^ z -> [x,y] ^ z - [x,z] ^ y + [y,z] ^ x.
Matrix d3_matrix(const LieAlgebra& L);

struct MultiplierResult {
  std::size_t dim_M = 0;
  std::size_t rank_d2 = 0;
  std::size_t rank_d3 = 0;
  std::size_t n = 0;
};

/// dim H_2(L) = C(n,2) - rank d2 - rank d3.
MultiplierResult multiplier_dim(const LieAlgebra& L);

}  // namespace schur

#endif
