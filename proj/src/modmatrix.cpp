#include "iwahori/modmatrix.hpp"

#include <numeric>

#include "iwahori/error.hpp"

namespace iwahori {

long mod_reduce(long x, long q) {
  x %= q;
  return x < 0 ? x + q : x;
}

long mod_inverse(long a, long q) {
  long r0 = q, r1 = mod_reduce(a, q), s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long t = r0 / r1;
    long tmp = r0 - t * r1;
    r0 = r1;
    r1 = tmp;
    tmp = s0 - t * s1;
    s0 = s1;
    s1 = tmp;
  }
  if (r0 != 1) throw DomainError("not a unit modulo " + std::to_string(q));
  return mod_reduce(s0, q);
}

long mod_pow(long a, long e, long q) {
  if (e < 0) {
    a = mod_inverse(a, q);
    e = -e;
  }
  long r = 1 % q;
  a = mod_reduce(a, q);
  for (; e; e >>= 1, a = a * a % q)
    if (e & 1) r = r * a % q;
  return r;
}

ModMatrix ModMatrix::identity(int n, long q) {
  auto m = zero(n, q);
  for (int i = 0; i < n; ++i) m(i, i) = 1 % q;
  return m;
}

ModMatrix ModMatrix::zero(int n, long q) {
  return {n, q, std::vector<long>(static_cast<std::size_t>(n * n), 0)};
}

ModMatrix ModMatrix::operator*(const ModMatrix& o) const {
  auto r = zero(n, modulus);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const long x = (*this)(i, k);
      if (x == 0) continue;
      for (int j = 0; j < n; ++j) r(i, j) += x * o(k, j) % modulus;
    }
  for (auto& x : r.a) x %= modulus;
  return r;
}

ModMatrix ModMatrix::inverse() const {
  auto m = *this;
  auto inv = identity(n, modulus);
  for (int c = 0; c < n; ++c) {
    int piv = -1;
    for (int r = c; r < n; ++r)
      if (std::gcd(m(r, c), modulus) == 1) { piv = r; break; }
    if (piv < 0) throw DomainError("matrix is not invertible modulo " + std::to_string(modulus));
    for (int j = 0; j < n; ++j) {
      std::swap(m(c, j), m(piv, j));
      std::swap(inv(c, j), inv(piv, j));
    }
    const long d = mod_inverse(m(c, c), modulus);
    for (int j = 0; j < n; ++j) {
      m(c, j) = m(c, j) * d % modulus;
      inv(c, j) = inv(c, j) * d % modulus;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || m(r, c) == 0) continue;
      const long f = m(r, c);
      for (int j = 0; j < n; ++j) {
        m(r, j) = mod_reduce(m(r, j) - f * m(c, j) % modulus, modulus);
        inv(r, j) = mod_reduce(inv(r, j) - f * inv(c, j) % modulus, modulus);
      }
    }
  }
  return inv;
}

ModMatrix ModMatrix::pow(long e) const {
  auto base = e < 0 ? inverse() : *this;
  if (e < 0) e = -e;
  auto r = identity(n, modulus);
  for (; e; e >>= 1) {
    if (e & 1) r = r * base;
    if (e > 1) base = base * base;
  }
  return r;
}

bool ModMatrix::is_identity() const { return *this == identity(n, modulus); }

ModMatrix commutator(const ModMatrix& g, const ModMatrix& h) { return g * h * g.inverse() * h.inverse(); }

std::size_t ModMatrixHash::operator()(const ModMatrix& m) const noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (long x : m.a) {
    h ^= static_cast<std::uint64_t>(x);
    h *= 0x100000001b3ULL;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

}  // namespace iwahori
