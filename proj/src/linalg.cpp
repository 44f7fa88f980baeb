#include "wob/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace wob {

RatMat ratIdentity(std::size_t n) {
  RatMat m(n, RatVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Rat ratDet(RatMat m) {
  const std::size_t n = m.size();
  Rat det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c] == 0) continue;
      Rat f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

RatMat ratInverse(RatMat m) {
  const std::size_t n = m.size();
  RatMat inv = ratIdentity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) throw std::invalid_argument("singular matrix");
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    Rat piv = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      Rat f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

RatVec ratMatVec(const RatMat& m, const RatVec& v) {
  RatVec r(m.size(), 0);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
  return r;
}

std::vector<Coords> hermiteUpperColumns(std::vector<Coords> cols) {
  const std::size_t n = cols.size();
  // Clear row r below the pivot column r by integer column operations,
  // working upward from the last row.
  for (std::size_t r = n; r-- > 0;) {
    while (true) {
      std::size_t best = r + 1;
      long long bestAbs = 0;
      int nonzero = 0;
      for (std::size_t j = 0; j <= r; ++j) {
        long long v = std::llabs(cols[j][r]);
        if (v == 0) continue;
        ++nonzero;
        if (best > r || v < bestAbs) {
          best = j;
          bestAbs = v;
        }
      }
      if (nonzero == 0) throw std::invalid_argument("singular lattice basis");
      if (nonzero == 1) {
        std::swap(cols[best], cols[r]);
        break;
      }
      for (std::size_t j = 0; j <= r; ++j) {
        if (j == best || cols[j][r] == 0) continue;
        long long q = cols[j][r] / cols[best][r];
        for (std::size_t i = 0; i < n; ++i) cols[j][i] -= q * cols[best][i];
      }
    }
    if (cols[r][r] < 0)
      for (std::size_t i = 0; i < n; ++i) cols[r][i] = -cols[r][i];
  }
  return cols;
}

Coords latticeBoxReduce(const std::vector<Coords>& hnf, Coords x) {
  const std::size_t n = hnf.size();
  for (std::size_t i = n; i-- > 0;) {
    long long d = hnf[i][i];
    long long q = x[i] / d;
    if (x[i] - q * d < 0) --q;  // floor division
    if (q == 0) continue;
    for (std::size_t k = 0; k < n; ++k) x[k] -= q * hnf[i][k];
  }
  return x;
}

}  // namespace wob
