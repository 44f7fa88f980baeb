#pragma once

#include "wob/exact.hpp"
#include "wob/types.hpp"

namespace wob {

// Small dense exact linear algebra, enough for rank <= 8 root systems.

RatMat ratIdentity(std::size_t n);
Rat ratDet(RatMat m);
RatMat ratInverse(RatMat m);  // throws std::invalid_argument if singular
RatVec ratMatVec(const RatMat& m, const RatVec& v);

// Column-style Hermite normal form of a nonsingular integer matrix given as
// column vectors: returns columns H with H[i][j] = 0 for i > j and positive
// diagonal, spanning the same lattice.
std::vector<Coords> hermiteUpperColumns(std::vector<Coords> cols);

// Reduces x modulo the lattice spanned by HNF columns into the canonical box
// 0 <= x_i < H[i][i].
Coords latticeBoxReduce(const std::vector<Coords>& hnf, Coords x);

}  // namespace wob
