#include "wob/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "wob/linalg.hpp"

namespace wob {

namespace {

// Description of one folding problem.  Weights reflect through Cartan
// columns, points through rows; affine groups add a zeroth wall with defect
// c_0 = M - sum gauge_j v_j and reflection v += c_0 * shift.
struct FoldSpec {
  bool transposed = false;      // true for points (dual-omega coordinates)
  const Coords* gauge = nullptr;  // null for the plain Weyl fold
  const Coords* shift = nullptr;
  long long M = 0;
};

template <typename T>
T affineDefect(const FoldSpec& spec, const std::vector<T>& v) {
  T c0 = spec.M;
  for (std::size_t j = 0; j < v.size(); ++j) c0 -= (*spec.gauge)[j] * v[j];
  return c0;
}

template <typename T>
double magnitudeOf(const std::vector<T>& v) {
  double s = 0;
  for (const T& x : v) {
    if constexpr (std::is_same_v<T, Rat>)
      s += std::fabs(x.get_d());
    else
      s += std::fabs(static_cast<double>(x));
  }
  return s;
}

template <typename T>
std::pair<std::vector<T>, int> foldCore(const AlgebraData& g, std::vector<T> v,
                                        const FoldSpec& spec, FoldStrategy strategy) {
  const int n = g.rank;
  const bool affine = spec.gauge != nullptr;
  const long long walls = static_cast<long long>(g.positiveRoots.size());
  const long long cap =
      64 + 64 * walls *
               (1 + static_cast<long long>(magnitudeOf(v) / std::max<long long>(1, spec.M ? spec.M : 1)));
  int sign = 1;
  for (long long iter = 0;; ++iter) {
    if (iter > cap) throw std::logic_error("affine fold did not terminate within its cap");
    // wall indices: 0 = affine wall (if any), i = simple reflection r_i.
    int wall = -1;
    T worst{};
    auto consider = [&](int idx, const T& c) {
      if (c >= 0) return false;
      if (wall < 0 || c < worst) {
        wall = idx;
        worst = c;
        return strategy == FoldStrategy::LowestIndexFirst;
      }
      return false;
    };
    bool done = false;
    if (affine) done = consider(0, affineDefect(spec, v));
    for (int i = 0; i < n && !done; ++i) done = consider(i + 1, v[i]);
    if (wall < 0) break;
    if (wall == 0) {
      T c0 = affineDefect(spec, v);
      for (int j = 0; j < n; ++j) v[j] += c0 * (*spec.shift)[j];
    } else {
      const int i = wall - 1;
      T vi = v[i];
      for (int j = 0; j < n; ++j) v[j] -= vi * (spec.transposed ? g.cartan[i][j] : g.cartan[j][i]);
    }
    sign = -sign;
  }
  return {std::move(v), sign};
}

template <typename T>
bool boundaryOf(const FoldSpec& spec, const std::vector<T>& v) {
  for (const T& x : v)
    if (x == 0) return true;
  if (spec.gauge) {
    T c0 = affineDefect(spec, v);
    if (c0 == 0) return true;
  }
  return false;
}

FoldResult runIntFold(const AlgebraData& g, Coords v, const FoldSpec& spec, FoldStrategy s) {
  std::vector<long long> vv(v.begin(), v.end());
  auto [rep, sign] = foldCore(g, std::move(vv), spec, s);
  FoldResult r;
  r.rep = Coords(rep.begin(), rep.end());
  r.sign = sign;
  r.onBoundary = boundaryOf(spec, rep);
  return r;
}

}  // namespace

std::vector<SignedOrbitEntry> weylOrbitSigned(const AlgebraData& g, const Coords& lambda) {
  const int n = g.rank;
  std::map<Coords, int> sign;          // distinct point -> sign of reaching word
  std::vector<Coords> frontier = {lambda};
  sign[lambda] = 1;
  bool conflict = false;
  while (!frontier.empty()) {
    Coords x = frontier.back();
    frontier.pop_back();
    int sx = sign[x];
    for (int i = 0; i < n; ++i) {
      Coords y = x;
      long long xi = x[i];
      for (int j = 0; j < n; ++j) y[j] -= xi * g.cartan[j][i];
      auto [it, inserted] = sign.emplace(y, -sx);
      if (inserted)
        frontier.push_back(y);
      else if (it->second != -sx)
        conflict = true;
    }
  }
  const long long distinct = static_cast<long long>(sign.size());
  const long long stab = g.weylOrder / distinct;
  std::vector<SignedOrbitEntry> out;
  out.reserve(conflict ? 2 * sign.size() : sign.size());
  for (const auto& [pt, sg] : sign) {
    if (conflict) {
      out.push_back({pt, +1, stab / 2});
      out.push_back({pt, -1, stab / 2});
    } else {
      out.push_back({pt, sg, stab});
    }
  }
  return out;
}

bool orbitHasSignConflict(const std::vector<SignedOrbitEntry>& orbit) {
  for (std::size_t i = 1; i < orbit.size(); ++i)
    if (orbit[i].weight == orbit[i - 1].weight) return true;
  return false;
}

FoldResult dominantFold(const AlgebraData& g, Coords lambda, FoldStrategy strategy) {
  FoldSpec spec;
  return runIntFold(g, std::move(lambda), spec, strategy);
}

FoldResult affineFoldPoint(const AlgebraData& g, Coords v, long long M, FoldStrategy strategy) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  FoldSpec spec{true, &g.marks, &g.highestRootPointCoords, M};
  return runIntFold(g, std::move(v), spec, strategy);
}

RatFoldResult affineFoldPoint(const AlgebraData& g, RatVec v, long long M, FoldStrategy strategy) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  FoldSpec spec{true, &g.marks, &g.highestRootPointCoords, M};
  auto [rep, sign] = foldCore(g, std::move(v), spec, strategy);
  RatFoldResult r;
  r.onBoundary = boundaryOf(spec, rep);
  r.rep = std::move(rep);
  r.sign = sign;
  return r;
}

FoldResult dualAffineFoldWeight(const AlgebraData& g, Coords lambda, long long M,
                                FoldStrategy strategy) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  FoldSpec spec{false, &g.dualMarks, &g.domShortRootOmega, M};
  return runIntFold(g, std::move(lambda), spec, strategy);
}

FoldResult affineFoldWeight(const AlgebraData& g, Coords lambda, long long M,
                            FoldStrategy strategy) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  FoldSpec spec{false, &g.comarks, &g.highestRootOmega, M};
  return runIntFold(g, std::move(lambda), spec, strategy);
}

long long stabilizerOrder(const AlgebraData& g, const Coords& v, GroupKind kind, long long M) {
  const int n = g.rank;
  const bool transposed = (kind == GroupKind::AffineOnPoints);

  std::map<Coords, char> seen;
  std::vector<Coords> frontier = {v};
  seen[v] = 1;
  while (!frontier.empty()) {
    Coords x = frontier.back();
    frontier.pop_back();
    for (int i = 0; i < n; ++i) {
      Coords y = x;
      long long xi = x[i];
      for (int j = 0; j < n; ++j) y[j] -= xi * (transposed ? g.cartan[i][j] : g.cartan[j][i]);
      if (seen.emplace(y, 1).second) frontier.push_back(y);
    }
  }
  const long long stabW = g.weylOrder / static_cast<long long>(seen.size());
  if (kind == GroupKind::Weyl) return stabW;

  if (M < 1) throw std::invalid_argument("affine stabilizer needs M >= 1");
  // #{w in W : w v == v mod M L} with L = Q^v (points) or Q (weights); the
  // translation solving the congruence is then unique.
  long long matches = 0;
  for (const auto& [y, _] : seen) {
    RatVec diff(n);
    for (int j = 0; j < n; ++j) diff[j] = y[j] - v[j];
    // alpha_j (weights) or alpha_j^v (points) coordinates of the difference.
    RatVec z(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        z[i] += (transposed ? g.cartanInverse[j][i] : g.cartanInverse[i][j]) * diff[j];
    bool inLattice = true;
    for (const Rat& c : z) {
      if (!isIntegral(c / Rat(M))) {
        inLattice = false;
        break;
      }
    }
    if (inLattice) ++matches;
  }
  return stabW * matches;
}

}  // namespace wob
