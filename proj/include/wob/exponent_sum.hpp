#pragma once

#include <complex>
#include <vector>

namespace wob {

// Integer element of the group ring Z[Z_N]: sum_k coeffs[k] zeta^k with
// zeta = exp(2 pi i / N).  Orbit-function values live here so that Galois
// substitutions zeta -> zeta^l are exact index permutations and equality is
// decidable (reduction modulo the N-th cyclotomic polynomial).
class ExponentSum {
 public:
  ExponentSum() = default;
  explicit ExponentSum(long long modulus);

  long long modulus() const { return static_cast<long long>(c_.size()); }
  const std::vector<long long>& coeffs() const { return c_; }

  void addTerm(long long residue, long long coeff);

  ExponentSum& operator+=(const ExponentSum& o);
  ExponentSum& operator-=(const ExponentSum& o);
  friend ExponentSum operator+(ExponentSum a, const ExponentSum& b) { return a += b; }
  friend ExponentSum operator-(ExponentSum a, const ExponentSum& b) { return a -= b; }
  friend ExponentSum operator*(const ExponentSum& a, const ExponentSum& b);  // cyclic convolution
  ExponentSum scaled(long long k) const;
  ExponentSum conjugated() const;                // zeta -> zeta^-1
  ExponentSum galoisImage(long long ell) const;  // zeta -> zeta^ell, gcd(ell, N) = 1

  // True iff the represented algebraic number is zero (exact).
  bool isZeroExact() const;
  // Structural identity of coefficient vectors; use (a - b).isZeroExact() for
  // algebraic equality.
  friend bool operator==(const ExponentSum&, const ExponentSum&) = default;

  // Numeric shadow; error is bounded by a small multiple of (mass * N) ulps.
  std::complex<double> toComplex() const;
  long long coeffMass() const;

 private:
  std::vector<long long> c_;
};

// Coefficients of the N-th cyclotomic polynomial, ascending degree (memoized).
const std::vector<long long>& cyclotomicPoly(long long N);

}  // namespace wob
