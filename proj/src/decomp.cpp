#include "wob/decomp.hpp"

#include <cmath>
#include <memory>
#include <random>
#include <sstream>
#include <stdexcept>

#include "wob/grids.hpp"
#include "wob/orbitfn.hpp"
#include "wob/weyl.hpp"

namespace wob {

namespace {

std::string coordsStr(const Coords& c) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
  os << ')';
  return os.str();
}

void requireLabel(const AlgebraData& g, Basis kind, const Coords& w, const char* side) {
  if (kind == Basis::S && !allPositive(w))
    throw std::invalid_argument(std::string(side) + " S-label must be strictly dominant");
  if (kind == Basis::C && !allNonNegative(w))
    throw std::invalid_argument(std::string(side) + " C-label must be dominant");
}

void requireGridLabel(const AlgebraData& g, Basis kind, const Coords& w, long long M,
                      const char* side) {
  requireLabel(g, kind, w, side);
  long long budget = M;
  for (int j = 0; j < g.rank; ++j) budget -= g.dualMarks[j] * w[j];
  if (budget < 0 || (kind == Basis::S && budget == 0))
    throw std::invalid_argument(std::string(side) + " label outside Lambda_M");
}

Basis outputBasis(Basis l, Basis r) {
  return (l == Basis::S) == (r == Basis::S) ? Basis::C : Basis::S;
}

// Shared expansion: orbit the right factor, fold each shifted weight with
// `fold`, which returns accumulation weight 0 for dropped wall terms.
template <typename FoldFn>
Decomposition expandProduct(const AlgebraData& g, Basis kindLeft, const Coords& lambda,
                            Basis kindRight, const Coords& mu, FoldFn&& fold) {
  Decomposition d;
  d.basis = outputBasis(kindLeft, kindRight);
  for (const auto& e : weylOrbitSigned(g, mu)) {
    long long c = e.multiplicity * (kindRight == Basis::S ? e.sign : 1);
    Coords shifted = addCoords(lambda, e.weight);
    auto [key, factor] = fold(shifted, d.basis);
    if (factor == 0) continue;
    d.coeffs[key] += c * factor;
  }
  std::erase_if(d.coeffs, [](const auto& kv) { return kv.second == 0; });
  return d;
}

}  // namespace

Decomposition productContinuous(const AlgebraData& g, Basis kindLeft, const Coords& lambda,
                                Basis kindRight, const Coords& mu) {
  requireLabel(g, kindLeft, lambda, "left");
  requireLabel(g, kindRight, mu, "right");
  return expandProduct(g, kindLeft, lambda, kindRight, mu,
                       [&](const Coords& w, Basis out) -> std::pair<Coords, long long> {
                         FoldResult f = dominantFold(g, w);
                         if (out == Basis::S && f.onBoundary) return {f.rep, 0};
                         return {f.rep, out == Basis::S ? f.sign : 1};
                       });
}

Decomposition productDiscretized(const AlgebraData& g, Basis kindLeft, const Coords& lambda,
                                 Basis kindRight, const Coords& mu, long long M) {
  requireGridLabel(g, kindLeft, lambda, M, "left");
  requireGridLabel(g, kindRight, mu, M, "right");
  Decomposition d = expandProduct(g, kindLeft, lambda, kindRight, mu,
                                  [&](const Coords& w, Basis out) -> std::pair<Coords, long long> {
                                    FoldResult f = dualAffineFoldWeight(g, w, M);
                                    if (out == Basis::S && f.onBoundary) return {f.rep, 0};
                                    return {f.rep, out == Basis::S ? f.sign : 1};
                                  });
  d.discretized = true;
  d.M = M;
  return d;
}

Decomposition foldDecomposition(const AlgebraData& g, const Decomposition& d, long long M) {
  if (d.discretized) throw std::invalid_argument("decomposition already discretized");
  Decomposition out;
  out.basis = d.basis;
  out.discretized = true;
  out.M = M;
  for (const auto& [key, coeff] : d.coeffs) {
    FoldResult f = dualAffineFoldWeight(g, key, M);
    if (d.basis == Basis::S) {
      if (f.onBoundary) continue;
      out.coeffs[f.rep] += coeff * f.sign;
    } else {
      out.coeffs[f.rep] += coeff;
    }
  }
  std::erase_if(out.coeffs, [](const auto& kv) { return kv.second == 0; });
  return out;
}

PointwiseReport verifyPointwise(const AlgebraData& g, const Decomposition& d, Basis kindLeft,
                                const Coords& lambda, Basis kindRight, const Coords& mu) {
  PointwiseReport rep;
  std::vector<std::pair<Coords, long long>> samplePoints;  // (kac, M)
  if (d.discretized) {
    const Grid& fm = cachedFM(g, d.M);
    for (std::size_t i = 0; i < fm.points.size(); ++i) {
      if (d.basis == Basis::S && !fm.interior[i]) continue;
      samplePoints.emplace_back(fm.points[i], d.M);
    }
  } else {
    // Random rational points with fixed denominators; exactness holds at any
    // resolution, the samples only need to be generic.
    std::mt19937_64 rng(0x5eed5eedULL);
    for (long long q : {11, 13}) {
      std::uniform_int_distribution<long long> dist(-2 * q, 2 * q);
      for (int s = 0; s < 5; ++s) {
        Coords kac(g.rank);
        for (auto& x : kac) x = dist(rng);
        samplePoints.emplace_back(kac, q);
      }
    }
  }

  long long prevM = -1;
  std::unique_ptr<OrbitEvaluator> evAL, evAR;
  std::vector<std::pair<Coords, std::unique_ptr<OrbitEvaluator>>> evTerms;
  for (const auto& [kac, M] : samplePoints) {
    if (M != prevM) {
      prevM = M;
      evAL = std::make_unique<OrbitEvaluator>(g, lambda, M);
      evAR = std::make_unique<OrbitEvaluator>(g, mu, M);
      evTerms.clear();
      for (const auto& [key, coeff] : d.coeffs)
        evTerms.emplace_back(key, std::make_unique<OrbitEvaluator>(g, key, M));
    }
    ExponentSum lhs = (kindLeft == Basis::S ? evAL->evalS(kac) : evAL->evalC(kac)) *
                      (kindRight == Basis::S ? evAR->evalS(kac) : evAR->evalC(kac));
    ExponentSum rhs(lhs.modulus());
    for (const auto& [key, ev] : evTerms) {
      ExponentSum t = d.basis == Basis::S ? ev->evalS(kac) : ev->evalC(kac);
      rhs += t.scaled(d.coeffs.at(key));
    }
    ++rep.pointsChecked;
    if (!(lhs - rhs).isZeroExact()) {
      rep.ok = false;
      rep.witness = coordsStr(kac) + "/" + std::to_string(M);
      return rep;
    }
  }
  return rep;
}

std::map<Coords, long long> coefficientsByOrthogonality(const AlgebraData& g, Basis kindLeft,
                                                        const Coords& lambda, Basis kindRight,
                                                        const Coords& mu, long long M) {
  const Basis out = outputBasis(kindLeft, kindRight);
  const Grid& fm = cachedFM(g, M);
  const Grid& lm = cachedLambdaM(g, M);
  OrbitEvaluator evL(g, lambda, M), evR(g, mu, M);
  const long long N = evL.modulus();

  // Product values across the grid (interior only for S output).
  std::vector<std::size_t> idx;
  std::vector<ExponentSum> prod;
  std::vector<long long> weight;
  for (std::size_t i = 0; i < fm.points.size(); ++i) {
    if (out == Basis::S && !fm.interior[i]) continue;
    const Coords& kac = fm.points[i];
    idx.push_back(i);
    prod.push_back((kindLeft == Basis::S ? evL.evalS(kac) : evL.evalC(kac)) *
                   (kindRight == Basis::S ? evR.evalS(kac) : evR.evalC(kac)));
    weight.push_back(out == Basis::S
                         ? g.weylOrder
                         : g.weylOrder / stabilizerOrder(g, kac, GroupKind::AffineOnPoints, M));
  }

  long long mPow = 1;
  for (int i = 0; i < g.rank; ++i) mPow *= M;
  const long long gramBase = g.detCartan * mPow * g.weylOrder;

  std::map<Coords, long long> coeffs;
  for (std::size_t li = 0; li < lm.points.size(); ++li) {
    const Coords& nu = lm.points[li];
    if (out == Basis::S && !lm.interior[li]) continue;
    OrbitEvaluator evNu(g, nu, M);
    ExponentSum acc(N);
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Coords& kac = fm.points[idx[k]];
      ExponentSum b = out == Basis::S ? evNu.evalS(kac) : evNu.evalC(kac);
      acc += (prod[k] * b.conjugated()).scaled(weight[k]);
    }
    // Gram diagonal: det C * M^n * |W| * |stab| (C case), det C * M^n * |W| (S).
    long long gram = gramBase;
    if (out == Basis::C) gram *= stabilizerOrder(g, nu, GroupKind::DualAffineOnWeights, M);
    double est = acc.toComplex().real() / static_cast<double>(gram);
    long long c = std::llround(est);
    ExponentSum check(N);
    check.addTerm(0, c * gram);
    if (!(acc - check).isZeroExact())
      throw std::logic_error("orthogonality extraction produced a non-integer coefficient");
    if (c != 0) coeffs[nu] = c;
  }
  return coeffs;
}

}  // namespace wob
