#pragma once

// Bernoulli numbers and the regular-prime test.

#include <gmpxx.h>

#include <vector>

#include "iwahori/closure.hpp"

namespace iwahori {

/// B_0..B_n exactly (B_1 = -1/2), from a process-wide cache.
std::vector<mpq_class> bernoulli_numbers(int n);

/// B_0..B_n mod p; requires n < p - 1 so every B_m is p-integral.
std::vector<long> bernoulli_mod_p(int n, long p);

enum class RegularityMethod { Exact, Modular, Both };

inline constexpr long kRegularityGuard = 10'000;
inline constexpr long kExactRegularityGuard = 1'000;

/// p divides no numerator of B_2, B_4, ..., B_{p-3}.
bool is_regular_prime(long p, RegularityMethod method = RegularityMethod::Modular);

/// Irregular primes in [lo, hi].
std::vector<long> irregular_primes(long lo, long hi, RegularityMethod method = RegularityMethod::Modular,
                                   Execution exec = Execution::Serial);

}  // namespace iwahori
