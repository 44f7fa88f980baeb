#include "wob/orbitfn.hpp"

#include <cmath>
#include <stdexcept>

namespace wob {

long long computeN(const AlgebraData& g, long long M) {
  if (M < 1) throw std::invalid_argument("M must be positive");
  Int n = 1;
  for (int i = 0; i < g.rank; ++i)
    for (int j = 0; j < g.rank; ++j) {
      Rat q = g.cartanInverse[i][j] / Rat(M);
      n = lcmInt(n, Int(q.get_den()));
    }
  return toLongChecked(n);
}

OrbitEvaluator::OrbitEvaluator(const AlgebraData& g, const Coords& lambda, long long M)
    : N_(computeN(g, M)), M_(M) {
  auto orbit = weylOrbitSigned(g, lambda);
  conflict_ = orbitHasSignConflict(orbit);
  terms_.reserve(orbit.size());
  const Rat scale = Rat(N_) / Rat(M);
  for (const auto& e : orbit) {
    Term t;
    t.sign = e.sign;
    t.multiplicity = e.multiplicity;
    RatVec c = alphaCoords(g, e.weight);
    t.scaledAlpha.resize(g.rank);
    for (int j = 0; j < g.rank; ++j) {
      Rat v = c[j] * scale;
      if (!isIntegral(v))
        throw std::logic_error("pairing denominator does not divide N");
      t.scaledAlpha[j] = ratToLong(v);
    }
    terms_.push_back(std::move(t));
  }
}

ExponentSum OrbitEvaluator::evalC(const Coords& kac) const {
  ExponentSum v(N_);
  for (const auto& t : terms_) {
    long long r = 0;
    for (std::size_t j = 0; j < kac.size(); ++j) r += t.scaledAlpha[j] * kac[j];
    v.addTerm(r, t.multiplicity);
  }
  return v;
}

ExponentSum OrbitEvaluator::evalS(const Coords& kac) const {
  ExponentSum v(N_);
  if (conflict_) return v;  // antisymmetric sum of a wall label vanishes
  for (const auto& t : terms_) {
    long long r = 0;
    for (std::size_t j = 0; j < kac.size(); ++j) r += t.scaledAlpha[j] * kac[j];
    v.addTerm(r, t.sign * t.multiplicity);
  }
  return v;
}

std::complex<double> OrbitEvaluator::evalCNumeric(const Coords& kac) const {
  std::complex<double> s = 0;
  for (const auto& t : terms_) {
    double r = 0;
    for (std::size_t j = 0; j < kac.size(); ++j)
      r += static_cast<double>(t.scaledAlpha[j]) * static_cast<double>(kac[j]);
    double arg = 2.0 * M_PI * r / static_cast<double>(N_);
    s += static_cast<double>(t.multiplicity) * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return s;
}

std::complex<double> OrbitEvaluator::evalSNumeric(const Coords& kac) const {
  std::complex<double> s = 0;
  if (conflict_) return s;
  for (const auto& t : terms_) {
    double r = 0;
    for (std::size_t j = 0; j < kac.size(); ++j)
      r += static_cast<double>(t.scaledAlpha[j]) * static_cast<double>(kac[j]);
    double arg = 2.0 * M_PI * r / static_cast<double>(N_);
    s += static_cast<double>(t.sign * t.multiplicity) *
         std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return s;
}

ExponentSum evalC(const AlgebraData& g, const Coords& lambda, const GridPoint& a) {
  return OrbitEvaluator(g, lambda, a.m).evalC(a.kac);
}

ExponentSum evalS(const AlgebraData& g, const Coords& lambda, const GridPoint& a) {
  return OrbitEvaluator(g, lambda, a.m).evalS(a.kac);
}

std::complex<double> toComplex(const ExponentSum& v) { return v.toComplex(); }

bool isZero(const ExponentSum& v) { return v.isZeroExact(); }

}  // namespace wob
