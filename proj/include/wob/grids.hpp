#pragma once

#include <memory>
#include <vector>

#include "wob/algebra.hpp"
#include "wob/types.hpp"

namespace wob {

// Discrete grid F_M (sample points) or Lambda_M (labels): coordinate tuples
// in lexicographic order with an interior flag per entry.
struct Grid {
  long long M = 1;
  std::vector<Coords> points;
  std::vector<char> interior;

  std::vector<Coords> interiorPoints() const;
  // Index of exact coordinates, -1 if absent.
  long long indexOf(const Coords& c) const;
};

// All solutions of sum_j a_j m_j <= M, a_j >= 0 (points of M*F, i.e. Kac
// numerators of F_M).  Interior means every Kac coordinate incl. a_0 is > 0.
Grid enumerateFM(const AlgebraData& g, long long M);

// All solutions of sum_j lambda_j m^v_j <= M (the label set Lambda_M = P_+^M).
Grid enumerateLambdaM(const AlgebraData& g, long long M);

// A transversal of P / MQ of size M^rank * det C (canonical Hermite box).
std::vector<Coords> cosetRepresentativesPmodMQ(const AlgebraData& g, long long M);

// Cached eager enumeration, safe under concurrent lookup.
const Grid& cachedFM(const AlgebraData& g, long long M);
const Grid& cachedLambdaM(const AlgebraData& g, long long M);

}  // namespace wob
