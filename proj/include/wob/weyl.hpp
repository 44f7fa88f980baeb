#pragma once

#include <vector>

#include "wob/algebra.hpp"
#include "wob/types.hpp"

namespace wob {

// Wall-selection order used while folding.  The representative and its sign
// are the same for every strategy; the knob exists so tests can confirm
// path-independence.
enum class FoldStrategy {
  GreedyMostNegative,  // most negative coordinate, ties to the lowest index
  LowestIndexFirst,
};

struct FoldResult {
  Coords rep;
  int sign = 1;            // det of the finite part of the folding element
  bool onBoundary = false; // some defining coordinate of rep vanishes
};

struct RatFoldResult {
  RatVec rep;
  int sign = 1;
  bool onBoundary = false;
};

// One entry of the signed Weyl orbit multiset {(w lambda, det w) : w in W}.
// For a stabilized lambda the multiset carries each distinct point with both
// signs in equal numbers; entries then come in (+1, -1) pairs.
struct SignedOrbitEntry {
  Coords weight;
  int sign = 1;
  long long multiplicity = 1;
};

// Full signed orbit, total multiplicity exactly |W|.  Entries are ordered by
// the weight's coordinates.
std::vector<SignedOrbitEntry> weylOrbitSigned(const AlgebraData& g, const Coords& lambda);

// True when the stabilizer of lambda in W is non-trivial (lambda lies on a
// reflection wall); the S-type orbit sum of such a weight vanishes.
bool orbitHasSignConflict(const std::vector<SignedOrbitEntry>& orbit);

// Folds into the dominant cone P_+ under W.
FoldResult dominantFold(const AlgebraData& g, Coords lambda,
                        FoldStrategy strategy = FoldStrategy::GreedyMostNegative);

// Folds dual-omega numerators v (the point v / M) into M*F under the
// augmented affine Weyl group M Q^v x W; Kac coordinates (a_0, v) end up
// non-negative with a_0 = M - sum_j v_j m_j.
FoldResult affineFoldPoint(const AlgebraData& g, Coords v, long long M,
                           FoldStrategy strategy = FoldStrategy::GreedyMostNegative);
RatFoldResult affineFoldPoint(const AlgebraData& g, RatVec v, long long M,
                              FoldStrategy strategy = FoldStrategy::GreedyMostNegative);

// Folds a weight into Lambda_M = P_+^M under the augmented dual affine Weyl
// group M Q x W; the affine coordinate is lambda_0 = M - sum_j lambda_j m^v_j.
FoldResult dualAffineFoldWeight(const AlgebraData& g, Coords lambda, long long M,
                                FoldStrategy strategy = FoldStrategy::GreedyMostNegative);

// Folds a weight into the alcove {lambda_j >= 0, sum_j lambda_j m'_j <= M} of
// M Q^v x W acting on weight space (comark walls); this is the fold used by
// affine fusion at shifted level M.
FoldResult affineFoldWeight(const AlgebraData& g, Coords lambda, long long M,
                            FoldStrategy strategy = FoldStrategy::GreedyMostNegative);

enum class GroupKind {
  Weyl,                // W on weights
  AffineOnPoints,      // M Q^v x W on dual-omega numerators over M
  DualAffineOnWeights, // M Q x W on weights
};

// Order of the stabilizer, computed by counting coincidences in the orbit
// (for the affine groups: finite-Weyl orbit points congruent to the input
// modulo the translation lattice).
long long stabilizerOrder(const AlgebraData& g, const Coords& v, GroupKind kind, long long M = 0);

}  // namespace wob
