// Exact linear algebra over Q: ranks and incremental row reduction.
#pragma once

#include <map>
#include <vector>

#include "parabolica/poly.hpp"

namespace parabolica {

using Matrix = std::vector<std::vector<Rational>>;

// rank of a dense rational matrix (rows scaled to integers, then Bareiss)
long rank(const Matrix &rows);
long rank_integer(std::vector<std::vector<mpz_class>> a);

// sparse vector keyed by coordinate
using SparseVec = std::map<Gen, Rational>;

// coordinates of a degree-1 polynomial; throws if it has other terms
SparseVec linear_coords(const Poly &f);

// incremental reduced echelon form of a span of sparse vectors
class RowSpace {
public:
  // returns true when v was independent of the current span
  bool add(SparseVec v);
  SparseVec reduce(SparseVec v) const;
  bool contains(const SparseVec &v) const { return reduce(v).empty(); }
  std::size_t dim() const { return rows_.size(); }

private:
  // pivot coordinate -> row normalised to 1 at the pivot; every row is
  // zero at the other pivots
  std::map<Gen, SparseVec> rows_;
};

}  // namespace parabolica
