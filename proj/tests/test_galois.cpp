#include <numeric>
#include <set>

#include "doctest.h"
#include "iwahori/bernoulli.hpp"
#include "iwahori/error.hpp"
#include "iwahori/galois.hpp"
#include "oracles.hpp"

using namespace iwahori;

namespace {

RootDatum adjoint(SimpleType t) { return RootDatum::adjoint(build_root_system(t)); }

std::vector<long> primes_in(long lo, long hi) {
  std::vector<long> out;
  for (long p = lo; p <= hi; ++p)
    if (p > 2 && is_prime(p)) out.push_back(p);
  return out;
}

}  // namespace

TEST_CASE("odd characters and the allowed set") {
  auto c = omega_chars(13, false);
  CHECK(c.odd == std::vector<long>{1, 3, 5, 7, 9, 11});
  CHECK(c.allowed == c.odd);
  CHECK(omega_chars(3, false).odd == std::vector<long>{1});
  for (long p : primes_in(3, 100)) CHECK(omega_chars(p, false).odd.size() == static_cast<std::size_t>((p - 1) / 2));

  const auto sl3 = RootDatum::simply_connected(build_root_system(CartanType::A, 2));
  c = omega_chars(sl3, 3);
  CHECK(c.includes_trivial);
  CHECK(c.allowed == std::vector<long>{0, 1});
  CHECK(!omega_chars(adjoint({CartanType::A, 2}), 3).includes_trivial);
  CHECK(omega_chars(adjoint({CartanType::A, 2}), 5).includes_trivial);
  CHECK_THROWS_AS(omega_chars(9, false), DomainError);
}

TEST_CASE("exact Bernoulli numbers match the Akiyama-Tanigawa oracle") {
  const auto ours = bernoulli_numbers(80);
  const auto ref = oracle::bernoulli(80);
  for (int m = 0; m <= 80; ++m) CHECK(ours[static_cast<std::size_t>(m)] == ref[static_cast<std::size_t>(m)]);
  CHECK(ours[1] == mpq_class(-1, 2));
  CHECK(ours[12] == mpq_class(-691, 2730));
}

TEST_CASE("Bernoulli numbers mod p agree with reduced exact values") {
  const auto exact = bernoulli_numbers(100);
  for (long p : {7L, 37L, 101L, 103L}) {
    const auto b = bernoulli_mod_p(static_cast<int>(p - 3), p);
    for (int m = 0; m <= p - 3; ++m) {
      const auto& q = exact[static_cast<std::size_t>(m)];
      mpz_class den_inv;
      mpz_class mod = p;
      REQUIRE(mpz_invert(den_inv.get_mpz_t(), q.get_den_mpz_t(), mod.get_mpz_t()) != 0);
      mpz_class r = q.get_num() * den_inv % mod;
      if (r < 0) r += mod;
      CHECK(b[static_cast<std::size_t>(m)] == r.get_si());
    }
  }
  CHECK_THROWS_AS(bernoulli_mod_p(6, 7), DomainError);
}

TEST_CASE("regular primes") {
  CHECK(!is_regular_prime(37, RegularityMethod::Both));
  CHECK(is_regular_prime(7, RegularityMethod::Both));
  CHECK(!is_regular_prime(691, RegularityMethod::Both));
  CHECK(is_regular_prime(3));
  CHECK_THROWS_AS(is_regular_prime(10007), DomainError);
  CHECK_THROWS_AS(is_regular_prime(1009, RegularityMethod::Exact), DomainError);
  CHECK_THROWS_AS(is_regular_prime(15), DomainError);

  // Oracle: divisibility of exact numerators computed independently.
  const auto ref = oracle::bernoulli(300);
  std::vector<long> expected;
  for (long p : primes_in(3, 300)) {
    bool irregular = false;
    for (long k = 2; k <= p - 3; k += 2)
      if (mpz_divisible_ui_p(ref[static_cast<std::size_t>(k)].get_num_mpz_t(), static_cast<unsigned long>(p))) irregular = true;
    if (irregular) expected.push_back(p);
  }
  CHECK(expected == std::vector<long>{37, 59, 67, 101, 103, 131, 149, 157, 233, 257, 263, 271, 283, 293});
  CHECK(irregular_primes(3, 300) == expected);
  CHECK(irregular_primes(3, 300, RegularityMethod::Exact, Execution::Parallel) == expected);
}

TEST_CASE("both Bernoulli methods agree up to 500") {
  const auto serial = irregular_primes(3, 500, RegularityMethod::Both, Execution::Serial);
  CHECK(irregular_primes(3, 500, RegularityMethod::Both, Execution::Parallel) == serial);
  CHECK(serial.size() == 28);
}

TEST_CASE("threshold constants from highest-root coefficients") {
  CHECK(threshold_constant({CartanType::E, 6}).p_1_mod_4 == 79);
  CHECK(threshold_constant({CartanType::E, 7}).p_1_mod_4 == 127);
  CHECK(threshold_constant({CartanType::E, 8}).p_1_mod_4 == 247);
  CHECK(threshold_constant({CartanType::F, 4}).p_3_mod_4 == 53);
  CHECK(threshold_constant({CartanType::G, 2}).p_1_mod_4 == 13);
  CHECK(threshold_for({CartanType::A, 4}, 13) == 11);
  CHECK(threshold_for({CartanType::A, 4}, 11) == 13);
  CHECK(highest_root_coefficients({CartanType::E, 6}) == std::vector<int>{1, 2, 2, 3, 2, 1});

  // The sum of the highest-root coefficients is odd for the exceptional types.
  for (auto t : oracle::simple_types(8)) {
    if (t.type != CartanType::E && t.type != CartanType::F && t.type != CartanType::G) continue;
    const auto n = highest_root_coefficients(t);
    CHECK(std::accumulate(n.begin(), n.end(), 0) % 2 == 1);
  }
}

TEST_CASE("constructive assignments: worked cases") {
  auto a = constructive_assignment({CartanType::A, 2}, 13);
  CHECK(a.phi == std::vector<long>{1, 11, 0});
  a = constructive_assignment({CartanType::G, 2}, 17);
  CHECK(a.phi == std::vector<long>{1, 3, 7});
  CHECK(a.n == std::vector<int>{3, 2});
  a = constructive_assignment({CartanType::E, 6}, 83);
  CHECK(a.phi == std::vector<long>{1, 3, 5, 7, 9, 11, 15});
  CHECK(constructive_assignment({CartanType::A, 1}, 7).phi == std::vector<long>{1, 5});

  CHECK_THROWS_AS(constructive_assignment({CartanType::A, 4}, 7), DomainError);
  CHECK_THROWS_AS(constructive_assignment({CartanType::E, 8}, 241), DomainError);
}

TEST_CASE("constructive assignments: each parity branch") {
  // A odd uses only odd characters; the even branches use the trivial one.
  auto a = constructive_assignment({CartanType::A, 3}, 13);
  CHECK(a.phi == std::vector<long>{1, 11, 3, 9});
  a = constructive_assignment({CartanType::A, 4}, 13);
  CHECK(a.phi == std::vector<long>{1, 11, 3, 9, 0});
  a = constructive_assignment({CartanType::B, 3}, 13);
  CHECK(a.phi == std::vector<long>{1, 3, 9, 11});
  a = constructive_assignment({CartanType::B, 4}, 13);
  CHECK(a.phi == std::vector<long>{1, 0, 3, 9, 11});
  a = constructive_assignment({CartanType::C, 3}, 13);
  CHECK(a.phi == std::vector<long>{3, 9, 1, 11});
  a = constructive_assignment({CartanType::C, 4}, 13);
  CHECK(a.phi == std::vector<long>{3, 9, 0, 1, 11});
  a = constructive_assignment({CartanType::D, 5}, 13);
  CHECK(a.phi == std::vector<long>{3, 5, 7, 1, 11, 9});
  a = constructive_assignment({CartanType::D, 4}, 13);
  CHECK(a.phi == std::vector<long>{1, 0, 11, 3, 9});
  a = constructive_assignment({CartanType::B, 2}, 13);
  CHECK(a.phi == std::vector<long>{1, 0, 11});
  a = constructive_assignment({CartanType::C, 2}, 13);
  CHECK(a.phi == std::vector<long>{0, 1, 11});
}

TEST_CASE("constructive assignments validate above every threshold") {
  // The exceptional progression puts -r on 2l-1 exactly when p = r + 2l, so
  // the published bound is one short whenever it is itself prime.
  std::set<std::pair<std::string, long>> failures;
  for (auto t : oracle::simple_types(8)) {
    for (long p : primes_in(3, 300)) {
      if (p < threshold_for(t, p)) {
        CHECK_THROWS_AS(constructive_assignment(t, p), DomainError);
        continue;
      }
      try {
        const auto a = constructive_assignment(t, p);
        CHECK(!assignment_violation(a, omega_chars(p, true)));
        CHECK(!assignment_violation(a, omega_chars(adjoint(t), p)));
      } catch (const InvariantViolation&) {
        failures.insert({to_string(t), p});
      }
    }
  }
  CHECK(failures == std::set<std::pair<std::string, long>>{{"E6", 79}, {"E7", 127}, {"F4", 53}, {"G2", 13}});
  CHECK(constructive_assignment({CartanType::G, 2}, 17).phi.back() == 7);
}

TEST_CASE("search: small cases and the brute-force oracle") {
  auto w = search_assignment({CartanType::A, 1}, omega_chars(7, false));
  REQUIRE(w);
  CHECK(w->phi == std::vector<long>{1, 5});
  CHECK(!search_assignment({CartanType::A, 2}, omega_chars(3, false)));
  CHECK_THROWS_AS(search_assignment({CartanType::A, 9}, omega_chars(101, false)), DomainError);

  for (auto t : oracle::simple_types(3)) {
    const auto n = highest_root_coefficients(t);
    for (long p : primes_in(3, 19)) {
      for (bool triv : {false, true}) {
        const auto chars = omega_chars(p, triv);
        const auto found = search_assignment(t, chars);
        CHECK(found.has_value() == oracle::assignment_exists(n, chars.allowed, chars.modulus));
        if (found) CHECK(!assignment_violation(*found, chars));
        CHECK(search_assignment(t, chars, {.exec = Execution::Parallel}) == found);
      }
    }
  }
}

TEST_CASE("search finds witnesses wherever the constructive bound holds") {
  for (auto t : oracle::simple_types(8)) {
    for (long p : primes_in(3, 101)) {
      if (p < threshold_for(t, p)) continue;
      const auto w = search_assignment(t, omega_chars(adjoint(t), p));
      INFO(to_string(t), " p=", p);
      REQUIRE(w);
      CHECK(!assignment_violation(*w, omega_chars(adjoint(t), p)));
    }
  }
}

TEST_CASE("search budget") {
  SearchOptions tight;
  tight.node_budget = 10;
  CHECK_THROWS_AS(search_assignment({CartanType::E, 8}, omega_chars(19, false), tight), ResourceError);
  // Nine odd characters for nine slots.
  const auto chars = omega_chars(19, false);
  const auto n = highest_root_coefficients({CartanType::E, 8});
  CHECK(search_assignment({CartanType::E, 8}, chars).has_value() == oracle::assignment_exists(n, chars.allowed, chars.modulus));
  // Eight for nine: rejected without searching.
  CHECK(!search_assignment({CartanType::E, 8}, omega_chars(17, false), tight));
}

TEST_CASE("criterion") {
  CriterionOptions opts;
  opts.check_regular = true;
  auto r = criterion(adjoint({CartanType::G, 2}), 13, opts);
  CHECK(r.bg_holds);
  REQUIRE(r.witness);
  CHECK(r.method == "search");
  CHECK(r.s_empty);
  CHECK(r.witness->phi == std::vector<long>{1, 0, 9});
  CHECK(r.regular == true);
  CHECK(r.holds);
  CHECK(r.threshold.p_1_mod_4 == 13);

  r = criterion(adjoint({CartanType::G, 2}), 3);
  CHECK(!r.bg_holds);
  CHECK(!r.holds);
  CHECK(!r.witness);

  r = criterion(adjoint({CartanType::A, 1}), 7);
  REQUIRE(r.witness);
  CHECK(r.witness->phi == std::vector<long>{1, 5});
  CHECK(r.holds);

  r = criterion(adjoint({CartanType::E, 8}), 251, opts);
  CHECK(r.method == "constructive");
  CHECK(r.holds);

  r = criterion(adjoint({CartanType::A, 2}), 37, opts);
  CHECK(r.witness);
  CHECK(r.regular == false);
  CHECK(!r.holds);

  for (auto t : oracle::simple_types(8)) CHECK(criterion(adjoint(t), 3).bg_holds == condition_B(t, 3));
  CHECK(!condition_B({CartanType::C, 3}, 3));
  CHECK(condition_B({CartanType::A, 2}, 3));
  CHECK(condition_B({CartanType::G, 2}, 5));

  CHECK_THROWS_AS(criterion(RootDatum::simply_connected(build_root_system(CartanType::A, 2)), 5), DomainError);
  const SimpleType two[] = {{CartanType::A, 1}, {CartanType::A, 1}};
  CHECK_THROWS_AS(criterion(RootDatum::adjoint(RootSystem::build(two)), 5), DomainError);
}
