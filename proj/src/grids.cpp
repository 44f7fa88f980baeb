#include "wob/grids.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "wob/linalg.hpp"

namespace wob {

namespace {

Grid enumerateBudget(const Coords& gauge, long long M) {
  const int n = static_cast<int>(gauge.size());
  Grid grid;
  grid.M = M;
  Coords cur(n, 0);
  // Lexicographic depth-first enumeration of sum_j cur_j gauge_j <= M.
  auto rec = [&](auto&& self, int j, long long remaining) -> void {
    if (j == n) {
      grid.points.push_back(cur);
      grid.interior.push_back(remaining > 0 && allPositive(cur) ? 1 : 0);
      return;
    }
    for (long long a = 0; a * gauge[j] <= remaining; ++a) {
      cur[j] = a;
      self(self, j + 1, remaining - a * gauge[j]);
    }
    cur[j] = 0;
  };
  rec(rec, 0, M);
  return grid;
}

}  // namespace

std::vector<Coords> Grid::interiorPoints() const {
  std::vector<Coords> out;
  for (std::size_t i = 0; i < points.size(); ++i)
    if (interior[i]) out.push_back(points[i]);
  return out;
}

long long Grid::indexOf(const Coords& c) const {
  auto it = std::lower_bound(points.begin(), points.end(), c);
  if (it == points.end() || *it != c) return -1;
  return it - points.begin();
}

Grid enumerateFM(const AlgebraData& g, long long M) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  return enumerateBudget(g.marks, M);
}

Grid enumerateLambdaM(const AlgebraData& g, long long M) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  return enumerateBudget(g.dualMarks, M);
}

std::vector<Coords> cosetRepresentativesPmodMQ(const AlgebraData& g, long long M) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  const int n = g.rank;
  std::vector<Coords> cols(n);
  for (int j = 0; j < n; ++j) cols[j] = scaleCoords(g.simpleRootOmega(j), M);
  auto hnf = hermiteUpperColumns(std::move(cols));
  std::vector<Coords> reps;
  Coords cur(n, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      reps.push_back(cur);
      return;
    }
    for (long long x = 0; x < hnf[i][i]; ++x) {
      cur[i] = x;
      self(self, i + 1);
    }
    cur[i] = 0;
  };
  rec(rec, 0);
  return reps;
}

namespace {

std::mutex gridCacheMutex;
std::map<std::pair<std::string, long long>, std::unique_ptr<Grid>> fmCache;
std::map<std::pair<std::string, long long>, std::unique_ptr<Grid>> lambdaCache;

const Grid& cachedGrid(std::map<std::pair<std::string, long long>, std::unique_ptr<Grid>>& cache,
                       const AlgebraData& g, long long M, Grid (*enumerate)(const AlgebraData&, long long)) {
  std::lock_guard<std::mutex> lock(gridCacheMutex);
  auto key = std::make_pair(g.id.str(), M);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<Grid>(enumerate(g, M))).first;
  return *it->second;
}

}  // namespace

const Grid& cachedFM(const AlgebraData& g, long long M) {
  return cachedGrid(fmCache, g, M, &enumerateFM);
}

const Grid& cachedLambdaM(const AlgebraData& g, long long M) {
  return cachedGrid(lambdaCache, g, M, &enumerateLambdaM);
}

}  // namespace wob
