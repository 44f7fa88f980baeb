#include "wob/exponent_sum.hpp"

#include <cmath>
#include <cstdlib>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace wob {

ExponentSum::ExponentSum(long long modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be positive");
  c_.assign(static_cast<std::size_t>(modulus), 0);
}

void ExponentSum::addTerm(long long residue, long long coeff) {
  const long long N = modulus();
  long long r = residue % N;
  if (r < 0) r += N;
  c_[static_cast<std::size_t>(r)] += coeff;
}

ExponentSum& ExponentSum::operator+=(const ExponentSum& o) {
  if (modulus() != o.modulus()) throw std::invalid_argument("modulus mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

ExponentSum& ExponentSum::operator-=(const ExponentSum& o) {
  if (modulus() != o.modulus()) throw std::invalid_argument("modulus mismatch");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

ExponentSum operator*(const ExponentSum& a, const ExponentSum& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("modulus mismatch");
  const std::size_t N = a.c_.size();
  ExponentSum r(static_cast<long long>(N));
  for (std::size_t i = 0; i < N; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < N; ++j) {
      if (b.c_[j] == 0) continue;
      std::size_t k = i + j;
      if (k >= N) k -= N;
      r.c_[k] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

ExponentSum ExponentSum::scaled(long long k) const {
  ExponentSum r = *this;
  for (long long& x : r.c_) x *= k;
  return r;
}

ExponentSum ExponentSum::conjugated() const {
  const long long N = modulus();
  ExponentSum r(N);
  for (long long k = 0; k < N; ++k) r.c_[static_cast<std::size_t>((N - k) % N)] = c_[k];
  return r;
}

ExponentSum ExponentSum::galoisImage(long long ell) const {
  const long long N = modulus();
  long long e = ell % N;
  if (e < 0) e += N;
  if (std::gcd(e, N) != 1) throw std::invalid_argument("ell not coprime to the modulus");
  ExponentSum r(N);
  for (long long k = 0; k < N; ++k) r.c_[static_cast<std::size_t>((k * e) % N)] += c_[k];
  return r;
}

namespace {

// Exact division of integer polynomials, divisor monic.
std::vector<long long> polyDivExact(std::vector<long long> num, const std::vector<long long>& den) {
  const long long dd = static_cast<long long>(den.size()) - 1;
  if (static_cast<long long>(num.size()) <= dd) throw std::logic_error("bad cyclotomic division");
  std::vector<long long> q(num.size() - dd, 0);
  for (long long i = static_cast<long long>(num.size()) - 1; i >= dd; --i) {
    long long f = num[i];
    if (f == 0) continue;
    long long shift = i - dd;
    q[shift] = f;
    for (long long j = 0; j <= dd; ++j) num[shift + j] -= f * den[j];
  }
  for (long long x : num)
    if (x != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

std::vector<long long> computeCyclotomic(long long N,
                                         std::map<long long, std::vector<long long>>& memo);

const std::vector<long long>& cyclotomicMemo(long long N,
                                             std::map<long long, std::vector<long long>>& memo) {
  auto it = memo.find(N);
  if (it == memo.end()) it = memo.emplace(N, computeCyclotomic(N, memo)).first;
  return it->second;
}

// Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d.
std::vector<long long> computeCyclotomic(long long N,
                                         std::map<long long, std::vector<long long>>& memo) {
  std::vector<long long> num(static_cast<std::size_t>(N) + 1, 0);
  num[0] = -1;
  num[static_cast<std::size_t>(N)] = 1;
  for (long long d = 1; d < N; ++d) {
    if (N % d != 0) continue;
    num = polyDivExact(std::move(num), cyclotomicMemo(d, memo));
  }
  return num;
}

std::mutex cycMutex;
std::map<long long, std::vector<long long>> cycCache;

}  // namespace

const std::vector<long long>& cyclotomicPoly(long long N) {
  if (N < 1) throw std::invalid_argument("N must be positive");
  std::lock_guard<std::mutex> lock(cycMutex);
  return cyclotomicMemo(N, cycCache);
}

bool ExponentSum::isZeroExact() const {
  bool trivial = true;
  for (long long x : c_)
    if (x != 0) {
      trivial = false;
      break;
    }
  if (trivial) return true;
  const auto& phi = cyclotomicPoly(modulus());
  // Remainder of the coefficient polynomial modulo the monic Phi_N.
  std::vector<long long> rem = c_;
  const std::size_t dd = phi.size() - 1;
  for (std::size_t i = rem.size(); i-- > 0;) {
    if (i + 1 <= dd) break;
    long long f = rem[i];
    if (f == 0) continue;
    std::size_t shift = i - dd;
    for (std::size_t j = 0; j <= dd; ++j) rem[shift + j] -= f * phi[j];
  }
  for (long long x : rem)
    if (x != 0) return false;
  return true;
}

std::complex<double> ExponentSum::toComplex() const {
  const double N = static_cast<double>(modulus());
  std::complex<double> s = 0;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    double arg = 2.0 * M_PI * static_cast<double>(k) / N;
    s += static_cast<double>(c_[k]) * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return s;
}

long long ExponentSum::coeffMass() const {
  long long m = 0;
  for (long long x : c_) m += std::llabs(x);
  return m;
}

}  // namespace wob
