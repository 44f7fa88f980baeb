#include "wob/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wob {

namespace {

void checkRank(char series, int n) {
  bool ok = false;
  switch (series) {
    case 'A': ok = n >= 1; break;
    case 'B': ok = n >= 2; break;
    case 'C': ok = n >= 2; break;
    case 'D': ok = n >= 3; break;
    case 'E': ok = n >= 6 && n <= 8; break;
    case 'F': ok = n == 4; break;
    case 'G': ok = n == 2; break;
    default: ok = false;
  }
  if (!ok)
    throw std::invalid_argument(std::string("invalid rank for series ") + series + ": " +
                                std::to_string(n));
}

std::vector<Coords> cartanMatrix(char series, int n) {
  std::vector<Coords> c(n, Coords(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  auto link = [&](int i, int j) { c[i][j] = -1; c[j][i] = -1; };
  switch (series) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 1][n - 2] = -2;  // alpha_n short
      break;
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      c[n - 2][n - 1] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 0; i + 1 < n - 1; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      c[2][1] = -2;  // alpha_3, alpha_4 short
      break;
    case 'G':
      c[0][1] = -1;
      c[1][0] = -3;  // alpha_1 long, alpha_2 short
      break;
  }
  return c;
}

// d_j = <alpha_j, alpha_j>/2 from the Cartan matrix: d_i C_ij = d_j C_ji
// propagated along the Dynkin graph, then scaled so long roots have d = 1.
RatVec symmetrizerOf(const std::vector<Coords>& c) {
  const int n = static_cast<int>(c.size());
  RatVec d(n, 0);
  d[0] = 1;
  std::vector<int> stack = {0};
  while (!stack.empty()) {
    int i = stack.back();
    stack.pop_back();
    for (int j = 0; j < n; ++j) {
      if (i == j || c[i][j] == 0 || d[j] != 0) continue;
      d[j] = d[i] * Rat(c[i][j]) / Rat(c[j][i]);
      stack.push_back(j);
    }
  }
  Rat dmax = d[0];
  for (const Rat& x : d) dmax = std::max(dmax, x);
  for (Rat& x : d) x /= dmax;
  return d;
}

}  // namespace

AlgebraId AlgebraId::parse(std::string_view s) {
  if (s.size() < 2) throw std::invalid_argument("algebra spec too short: " + std::string(s));
  char series = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  int rank = 0;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("malformed algebra spec: " + std::string(s));
    rank = rank * 10 + (s[i] - '0');
    if (rank > 64) throw std::invalid_argument("rank too large: " + std::string(s));
  }
  checkRank(series, rank);
  return AlgebraId{series, rank};
}

std::string AlgebraId::str() const { return std::string(1, series) + std::to_string(rank); }

Coords AlgebraData::simpleRootOmega(int j) const {
  Coords v(rank);
  for (int i = 0; i < rank; ++i) v[i] = cartan[i][j];
  return v;
}

Coords AlgebraData::simpleCorootPoint(int j) const {
  return cartan[j];  // <alpha_j^v, alpha_k> = C[j][k]
}

AlgebraData buildAlgebra(AlgebraId id) {
  checkRank(id.series, id.rank);
  AlgebraData g;
  g.id = id;
  g.rank = id.rank;
  const int n = g.rank;
  g.cartan = cartanMatrix(id.series, n);
  g.symmetrizer = symmetrizerOf(g.cartan);

  RatMat cr(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) cr[i][j] = g.cartan[i][j];
  g.cartanInverse = ratInverse(cr);
  g.detCartan = ratToLong(ratDet(cr));

  g.quadFormOmega.assign(n, RatVec(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.quadFormOmega[i][j] = g.symmetrizer[j] * g.cartanInverse[j][i];

  // Root system by reflection closure from the simple roots.  A root is kept
  // in alpha coordinates; its omega coordinates are C * alpha.
  std::set<Coords> roots;
  std::vector<Coords> frontier;
  for (int j = 0; j < n; ++j) {
    Coords e(n, 0);
    e[j] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    Coords r = frontier.back();
    frontier.pop_back();
    Coords omega(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) omega[i] += g.cartan[i][j] * r[j];
    for (int i = 0; i < n; ++i) {
      Coords s = r;
      s[i] -= omega[i];
      if (roots.insert(s).second) frontier.push_back(s);
    }
  }

  for (const Coords& r : roots) {
    if (!allNonNegative(r)) continue;
    PosRoot pr;
    pr.alpha = r;
    pr.omega.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) pr.omega[i] += g.cartan[i][j] * r[j];
    Rat norm = 0;  // <r, r> = sum_ij r_i r_j d_i C_ij
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) norm += Rat(r[i] * r[j]) * g.symmetrizer[i] * Rat(g.cartan[i][j]);
    pr.halfNorm = norm / 2;
    pr.coroot.assign(n, 0);
    for (int j = 0; j < n; ++j) pr.coroot[j] = ratToLong(Rat(r[j]) * g.symmetrizer[j] / pr.halfNorm);
    g.positiveRoots.push_back(pr);
  }
  std::sort(g.positiveRoots.begin(), g.positiveRoots.end(),
            [](const PosRoot& a, const PosRoot& b) { return a.alpha < b.alpha; });

  auto height = [](const Coords& v) { return std::accumulate(v.begin(), v.end(), 0LL); };
  const PosRoot* highest = &g.positiveRoots.front();
  const PosRoot* dualHighest = &g.positiveRoots.front();
  for (const PosRoot& r : g.positiveRoots) {
    if (height(r.alpha) > height(highest->alpha)) highest = &r;
    if (height(r.coroot) > height(dualHighest->coroot)) dualHighest = &r;
  }

  g.marks = highest->alpha;
  g.dualMarks = dualHighest->coroot;
  g.comarks = highest->coroot;
  g.dualCoxeter = 1 + height(g.comarks);
  g.highestRootOmega = highest->omega;
  g.domShortRootOmega = dualHighest->omega;

  // xi in dual-omega coordinates: <xi, alpha_k> = d_k * (C marks)_k.
  g.highestRootPointCoords.assign(n, 0);
  for (int k = 0; k < n; ++k)
    g.highestRootPointCoords[k] = ratToLong(g.symmetrizer[k] * Rat(g.highestRootOmega[k]));

  // |W| = n! * (product of marks) * det C.
  long long w = g.detCartan;
  for (int i = 1; i <= n; ++i) w *= i;
  for (long long m : g.marks) w *= m;
  g.weylOrder = w;

  // |P / Q^v| = det C / prod d_j.
  Rat pq = g.detCartan;
  for (const Rat& d : g.symmetrizer) pq /= d;
  g.pqVeeIndex = ratToLong(pq);

  g.rho.assign(n, 1);
  return g;
}

Rat pairWeightPoint(const AlgebraData& g, const Coords& lambda, const GridPoint& a) {
  if (a.m < 1) throw std::invalid_argument("grid resolution must be positive");
  RatVec c = alphaCoords(g, lambda);
  Rat s = 0;
  for (int j = 0; j < g.rank; ++j) s += c[j] * Rat(a.kac[j]);
  return s / Rat(a.m);
}

RatVec alphaCoords(const AlgebraData& g, const RatVec& omegaCoords) {
  return ratMatVec(g.cartanInverse, omegaCoords);
}

RatVec alphaCoords(const AlgebraData& g, const Coords& omegaCoords) {
  RatVec v(omegaCoords.size());
  for (std::size_t i = 0; i < omegaCoords.size(); ++i) v[i] = omegaCoords[i];
  return alphaCoords(g, v);
}

}  // namespace wob
