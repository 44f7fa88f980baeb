#pragma once

#include <complex>
#include <vector>

#include "wob/algebra.hpp"
#include "wob/exponent_sum.hpp"
#include "wob/types.hpp"
#include "wob/weyl.hpp"

namespace wob {

// Least N with N <lambda, a> integral for all lambda in Lambda_M, a in F_M;
// always divides M * det C.
long long computeN(const AlgebraData& g, long long M);

// Precomputed signed orbit of one label at resolution M: residues of
// N <w lambda, a> become integer dot products with the Kac numerators of a.
// Built once per label, then evaluated across a whole grid.
class OrbitEvaluator {
 public:
  OrbitEvaluator(const AlgebraData& g, const Coords& lambda, long long M);

  long long modulus() const { return N_; }
  bool labelOnWall() const { return conflict_; }

  ExponentSum evalC(const Coords& kac) const;
  ExponentSum evalS(const Coords& kac) const;
  // Direct floating Weyl sums, used only to cross-validate the exact path.
  std::complex<double> evalCNumeric(const Coords& kac) const;
  std::complex<double> evalSNumeric(const Coords& kac) const;

 private:
  long long N_ = 1;
  long long M_ = 1;
  bool conflict_ = false;
  struct Term {
    Coords scaledAlpha;  // (N / M) * alpha-coordinates of w lambda (integral)
    int sign = 1;
    long long multiplicity = 1;
  };
  std::vector<Term> terms_;
};

// C-function Phi_lambda(a): sum of exp(2 pi i <w lambda, a>) over the full
// |W|-multiset.
ExponentSum evalC(const AlgebraData& g, const Coords& lambda, const GridPoint& a);

// S-function phi_lambda(a): the det-signed sum; identically zero when lambda
// lies on a reflection wall.
ExponentSum evalS(const AlgebraData& g, const Coords& lambda, const GridPoint& a);

std::complex<double> toComplex(const ExponentSum& v);
bool isZero(const ExponentSum& v);

}  // namespace wob
