#include "iwahori/bernoulli.hpp"

#include <mutex>

#include "iwahori/error.hpp"
#include "iwahori/modmatrix.hpp"
#include "iwahori/rootdata.hpp"

namespace iwahori {

namespace {

std::mutex cache_mutex;
std::vector<mpq_class> cache;

}  // namespace

std::vector<mpq_class> bernoulli_numbers(int n) {
  if (n < 0) throw DomainError("negative Bernoulli index");
  std::lock_guard<std::mutex> lock(cache_mutex);
  // sum_{j=0}^{m} C(m+1, j) B_j = 0
  while (static_cast<int>(cache.size()) <= n) {
    const int m = static_cast<int>(cache.size());
    if (m == 0) {
      cache.emplace_back(1);
      continue;
    }
    if (m > 1 && m % 2 == 1) {
      cache.emplace_back(0);
      continue;
    }
    mpq_class s = 0;
    mpz_class binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      if (cache[static_cast<std::size_t>(j)] != 0) s += binom * cache[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    mpq_class b = -s / (m + 1);
    b.canonicalize();
    cache.push_back(b);
  }
  return {cache.begin(), cache.begin() + n + 1};
}

std::vector<long> bernoulli_mod_p(int n, long p) {
  if (n >= p - 1) throw DomainError("B_m mod p needs m < p - 1");
  std::vector<long> b(static_cast<std::size_t>(n + 1), 0);
  // C(m+1, j) mod p row by row.
  std::vector<long> row = {1, 1};
  b[0] = 1;
  for (int m = 1; m <= n; ++m) {
    std::vector<long> next(static_cast<std::size_t>(m + 2), 1);
    for (int j = 1; j <= m; ++j) next[static_cast<std::size_t>(j)] = (row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)]) % p;
    row = std::move(next);
    if (m > 1 && m % 2 == 1) continue;
    long s = 0;
    for (int j = 0; j < m; ++j) s = (s + row[static_cast<std::size_t>(j)] * b[static_cast<std::size_t>(j)]) % p;
    b[static_cast<std::size_t>(m)] = mod_reduce(-s * mod_inverse(m + 1, p), p);
  }
  return b;
}

namespace {

bool regular_exact(long p) {
  if (p > kExactRegularityGuard) throw DomainError("exact Bernoulli test limited to p <= " + std::to_string(kExactRegularityGuard));
  const auto b = bernoulli_numbers(static_cast<int>(p - 3));
  for (long k = 2; k <= p - 3; k += 2)
    if (mpz_divisible_ui_p(b[static_cast<std::size_t>(k)].get_num_mpz_t(), static_cast<unsigned long>(p))) return false;
  return true;
}

bool regular_modular(long p) {
  if (p <= 3) return true;
  const auto b = bernoulli_mod_p(static_cast<int>(p - 3), p);
  for (long k = 2; k <= p - 3; k += 2)
    if (b[static_cast<std::size_t>(k)] == 0) return false;
  return true;
}

}  // namespace

bool is_regular_prime(long p, RegularityMethod method) {
  if (p < 3 || !is_prime(p)) throw DomainError("p must be an odd prime");
  if (p > kRegularityGuard) throw DomainError("regularity test limited to p <= " + std::to_string(kRegularityGuard));
  switch (method) {
    case RegularityMethod::Exact: return regular_exact(p);
    case RegularityMethod::Modular: return regular_modular(p);
    case RegularityMethod::Both: {
      const bool a = regular_exact(p), b = regular_modular(p);
      ensure(a == b, "Bernoulli methods disagree at p = " + std::to_string(p));
      return a;
    }
  }
  return false;
}

std::vector<long> irregular_primes(long lo, long hi, RegularityMethod method, Execution exec) {
  std::vector<long> primes;
  for (long p = std::max(3L, lo); p <= hi; ++p)
    if (is_prime(p)) primes.push_back(p);
  if (method != RegularityMethod::Modular && !primes.empty()) bernoulli_numbers(static_cast<int>(primes.back()));
  std::vector<char> irregular(primes.size(), 0);
  if (exec == Execution::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(primes.size()); ++i)
      irregular[static_cast<std::size_t>(i)] = !is_regular_prime(primes[static_cast<std::size_t>(i)], method);
  } else {
    for (std::size_t i = 0; i < primes.size(); ++i) irregular[i] = !is_regular_prime(primes[i], method);
  }
  std::vector<long> out;
  for (std::size_t i = 0; i < primes.size(); ++i)
    if (irregular[i]) out.push_back(primes[i]);
  return out;
}

}  // namespace iwahori
