#pragma once

#include <map>
#include <string>

#include "wob/algebra.hpp"
#include "wob/types.hpp"

namespace wob {

enum class Basis : char { C = 'C', S = 'S' };

// Signed-integer decomposition of a product of orbit functions over dominant
// labels, in the C or S family, either as continuous functions or restricted
// to the grid at resolution M.
struct Decomposition {
  Basis basis = Basis::C;
  bool discretized = false;
  long long M = 0;  // meaningful when discretized
  std::map<Coords, long long> coeffs;

  friend bool operator==(const Decomposition&, const Decomposition&) = default;
};

// Expands the product of two orbit functions combinatorially: the right
// factor is replaced by its signed Weyl orbit, each shifted weight
// lambda + w mu is folded to the dominant cone, and wall terms are dropped
// for S output.  S-side labels must be strictly dominant.
Decomposition productContinuous(const AlgebraData& g, Basis kindLeft, const Coords& lambda,
                                Basis kindRight, const Coords& mu);

// Same expansion with each shifted weight folded directly into Lambda_M by
// the augmented dual affine Weyl group.  Labels must lie in Lambda_M (S-side
// in its interior).  Agrees with foldDecomposition(productContinuous(...)).
Decomposition productDiscretized(const AlgebraData& g, Basis kindLeft, const Coords& lambda,
                                 Basis kindRight, const Coords& mu, long long M);

// Folds the labels of a continuous decomposition into Lambda_M: C-basis keys
// keep their coefficient (boundary kept), S-basis keys pick up the retraction
// determinant and vanish on the boundary.
Decomposition foldDecomposition(const AlgebraData& g, const Decomposition& d, long long M);

struct PointwiseReport {
  bool ok = true;
  long long pointsChecked = 0;
  std::string witness;  // first violating point, empty when ok
};

// Independent oracle: evaluates left product and right-hand expansion exactly
// at every grid point (discretized) or at random rational points (continuous)
// and compares as cyclotomic integers.
PointwiseReport verifyPointwise(const AlgebraData& g, const Decomposition& d, Basis kindLeft,
                                const Coords& lambda, Basis kindRight, const Coords& mu);

// Second oracle: extracts coefficients from discrete orthogonality over F_M
// (C output, stabilizer weights) or its interior S analogue; exact integers.
std::map<Coords, long long> coefficientsByOrthogonality(const AlgebraData& g, Basis kindLeft,
                                                        const Coords& lambda, Basis kindRight,
                                                        const Coords& mu, long long M);

}  // namespace wob
