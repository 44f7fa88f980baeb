#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wob/exact.hpp"
#include "wob/linalg.hpp"
#include "wob/types.hpp"

namespace wob {

// Identifier of a simple Lie algebra: series letter A..G plus rank.
struct AlgebraId {
  char series = 'A';
  int rank = 1;

  // Accepts "A1".."G2", case-insensitive.  Throws std::invalid_argument on
  // malformed input or a rank outside the series.
  static AlgebraId parse(std::string_view s);
  std::string str() const;

  friend bool operator==(const AlgebraId&, const AlgebraId&) = default;
};

// One positive root, carried in every basis the rest of the library needs.
struct PosRoot {
  Coords alpha;    // expansion over simple roots (integers)
  Coords omega;    // omega-basis coordinates
  Coords coroot;   // expansion of the coroot over simple coroots (integers)
  Rat halfNorm;    // <alpha, alpha> / 2, one of 1, 1/2, 1/3
};

// Static constants of a simple Lie algebra.
//
// Simple roots are normalized so long roots have squared length 2, and are
// labeled per series as follows (Bourbaki for A-F):
//   A_n       chain 1-2-...-n
//   B_n       chain, alpha_n short
//   C_n       chain, alpha_n long
//   D_n       chain 1..n-2 with fork to n-1 and n
//   E_6..E_8  chain 1-3-4-5-6(-7)(-8) with 2 attached to 4
//   F_4       chain, alpha_1, alpha_2 long, alpha_3, alpha_4 short
//   G_2       alpha_1 long, alpha_2 short (dual marks (3,2))
//
// Immutable after construction; safe to share across threads.
struct AlgebraData {
  AlgebraId id;
  int rank = 0;

  std::vector<Coords> cartan;  // rows: cartan[i][j] = <alpha_i^v, alpha_j>
  RatVec symmetrizer;          // d_j = <alpha_j, alpha_j> / 2
  RatMat cartanInverse;
  RatMat quadFormOmega;  // <omega_i, omega_j>

  Coords marks;      // highest root over the alpha basis
  Coords dualMarks;  // highest dual root over the coroot basis
  Coords comarks;    // highest root over the coroot basis
  long long dualCoxeter = 0;

  Coords highestRootOmega;        // xi in omega coordinates
  Coords highestRootPointCoords;  // xi in dual-omega coordinates (integral)
  Coords domShortRootOmega;       // coroot-dual of the highest dual root, in
                                  // omega coordinates (= xi when simply laced)

  std::vector<PosRoot> positiveRoots;
  long long weylOrder = 0;
  long long detCartan = 0;
  long long pqVeeIndex = 0;  // |P / Q^v|
  Coords rho;                // (1, ..., 1)

  // Weight reflections act through Cartan columns, point reflections through
  // rows; kept as helpers so callers never index the matrix the wrong way.
  Coords simpleRootOmega(int j) const;   // alpha_j in omega coordinates
  Coords simpleCorootPoint(int j) const; // alpha_j^v in dual-omega coordinates
};

// Builds all constants from the Cartan matrix alone (roots by reflection
// closure, never from tables).  Throws std::invalid_argument for a rank
// outside the series.
AlgebraData buildAlgebra(AlgebraId id);

// Exact pairing <lambda, a> of an integral weight (omega basis) with a grid
// point; equals (1/a.m) * sum_j c_j a.kac[j] with c the alpha coordinates of
// lambda.
Rat pairWeightPoint(const AlgebraData& g, const Coords& lambda, const GridPoint& a);

// Change of basis omega -> alpha.
RatVec alphaCoords(const AlgebraData& g, const RatVec& omegaCoords);
RatVec alphaCoords(const AlgebraData& g, const Coords& omegaCoords);

}  // namespace wob
