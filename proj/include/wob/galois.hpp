#pragma once

#include <string>
#include <vector>

#include "wob/algebra.hpp"
#include "wob/decomp.hpp"
#include "wob/exponent_sum.hpp"
#include "wob/types.hpp"

namespace wob {

// Galois transformation t_ell at fixed (algebra, M): exponent substitution
// zeta -> zeta^ell realized as a signed permutation of the label grid
// Lambda_M and of the point grid F_M.  Indices refer to the canonical grid
// order; sign 0 marks a boundary element whose antisymmetric sign is
// undefined.
struct GaloisMap {
  long long M = 1;
  long long ell = 1;
  long long N = 1;
  std::vector<long long> labelTo;  // Lambda_M index -> Lambda_M index
  std::vector<int> labelSign;      // +1 / -1, 0 on the boundary
  std::vector<long long> pointTo;  // F_M index -> F_M index
  std::vector<int> pointSign;
};

// ell is reduced mod N; requires gcd(ell, N) = 1.  Maps are memoized per
// (algebra, M, ell).
const GaloisMap& buildGaloisMap(const AlgebraData& g, long long M, long long ell);

// Exponent substitution on a value: coefficient at residue k moves to
// residue ell k mod N.
ExponentSum applyGaloisToValue(const ExponentSum& v, long long ell);

struct GaloisReport {
  bool pass = true;
  long long checksRun = 0;
  std::string witness;
};

// Verifies, exactly and for every grid pair, the twin identities
//   t_ell(phi_l(a)) = sign_label * phi_{t[l]}(a) = sign_point * phi_l(t[a])
// on the interior grids, plus the sign-free C analogue on the full grids.
GaloisReport checkGaloisSymmetry(const AlgebraData& g, long long M, long long ell);

// Verifies the induced coefficient symmetry for the pair (lambda, mu): for
// every nu, the <C|SS>, <C|CC> and <S|CS> decomposition coefficients of the
// Galois-transformed labels match the originals up to the label signs.
GaloisReport checkCoefficientSymmetry(const AlgebraData& g, long long M, long long ell,
                                      const Coords& lambda, const Coords& mu);

}  // namespace wob
