#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace wob {

// Exact arithmetic scalars.  All Lie-algebraic constants, pairings and
// exponents are kept rational; floating point appears only in the numeric
// shadow of cyclotomic values and in the modular S-matrix.
using Int = mpz_class;
using Rat = mpq_class;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

inline long long toLongChecked(const Int& v) {
  if (!v.fits_slong_p()) throw std::overflow_error("integer out of long long range");
  return v.get_si();
}

inline bool isIntegral(const Rat& r) { return r.get_den() == 1; }

inline long long ratToLong(const Rat& r) {
  if (!isIntegral(r)) throw std::logic_error("rational is not an integer: " + r.get_str());
  return toLongChecked(Int(r.get_num()));
}

inline Int lcmInt(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// Canonical "p/q" (or plain "p") string.
inline std::string ratString(const Rat& r) { return r.get_str(); }

}  // namespace wob
