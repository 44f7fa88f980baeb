#pragma once

#include <cstddef>
#include <vector>

namespace wob {

// Integer coordinate vector.  Weights are stored in the omega basis
// (fundamental weights); grid points in the dual omega basis as Kac
// numerators over the resolution M.
using Coords = std::vector<long long>;

// Sample point (1/m) * sum_j kac[j] omega^v_j.  The numerators are not
// required to lie in any fundamental domain; membership in F_M is the
// grid module's concern.
struct GridPoint {
  Coords kac;
  long long m = 1;

  friend bool operator==(const GridPoint&, const GridPoint&) = default;
};

// Dominant-weight label of Lambda_M in omega coordinates.
struct LabelWeight {
  Coords omega;
  long long m = 1;

  friend bool operator==(const LabelWeight&, const LabelWeight&) = default;
};

inline Coords addCoords(const Coords& a, const Coords& b) {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Coords subCoords(const Coords& a, const Coords& b) {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Coords scaleCoords(const Coords& a, long long k) {
  Coords r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

inline bool allNonNegative(const Coords& a) {
  for (long long x : a)
    if (x < 0) return false;
  return true;
}

inline bool allPositive(const Coords& a) {
  for (long long x : a)
    if (x <= 0) return false;
  return true;
}

}  // namespace wob
