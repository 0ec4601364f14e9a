#pragma once

// Character combinatorics over Z/(p-1) deciding whether a Galois
// representation onto I(1) exists for K = Q(mu_p).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "iwahori/closure.hpp"
#include "iwahori/rootdata.hpp"

namespace iwahori {

/// Characters of Omega ~ Z/(p-1), written as residues. Odd characters are the
/// odd residues; the trivial character is 0.
struct OmegaChars {
  long p = 0;
  long modulus = 0;
  std::vector<long> odd;
  bool includes_trivial = false;  ///< S is empty
  /// Sorted ascending; the trivial character comes first when present.
  std::vector<long> allowed;

  bool is_allowed(long chi) const;
};

OmegaChars omega_chars(const RootDatum& rd, long p);
/// Odd residues, plus 0 when `include_trivial`.
OmegaChars omega_chars(long p, bool include_trivial);

struct CharacterAssignment {
  long modulus = 0;
  std::vector<long> phi;  ///< phi_1 .. phi_{l+1}
  std::vector<int> n;     ///< highest-root coefficients n_1 .. n_l

  friend bool operator==(const CharacterAssignment&, const CharacterAssignment&) = default;
};

/// Empty when `a` is distinct, allowed and has trivial weighted product;
/// otherwise a description of the first failure.
std::optional<std::string> assignment_violation(const CharacterAssignment& a, const OmegaChars& chars);

/// Highest-root coefficients of a simple type, read off the built root system.
std::vector<int> highest_root_coefficients(SimpleType t);

struct ThresholdConstant {
  long p_1_mod_4 = 0;
  long p_3_mod_4 = 0;
  bool exceptional = false;
  friend bool operator==(const ThresholdConstant&, const ThresholdConstant&) = default;
};

ThresholdConstant threshold_constant(SimpleType t);
/// The bound that applies to a prime of p's congruence class.
long threshold_for(SimpleType t, long p);

/// The assignment built in the existence lemmas: inverse pairs of odd
/// characters for A-D, phi_i = 2i-1 for the exceptional types. Throws
/// DomainError below the threshold and InvariantViolation if the result fails
/// validation.
CharacterAssignment constructive_assignment(SimpleType t, long p);

struct SearchOptions {
  std::uint64_t node_budget = 50'000'000;  ///< per first-coordinate subtree
  Execution exec = Execution::Serial;
};

/// Lexicographically smallest witness over `chars.allowed`, or none.
std::optional<CharacterAssignment> search_assignment(SimpleType t, const OmegaChars& chars,
                                                     SearchOptions opts = {});

/// B(G): no summand of the Frattini quotient is built from two simple roots
/// at p = 3 (fails for A1, B, C, F4, G2).
bool condition_B(SimpleType t, long p);

struct CriterionReport {
  SimpleType type{CartanType::A, 1};
  long p = 0;
  bool bg_holds = false;
  bool s_empty = false;
  std::optional<CharacterAssignment> witness;
  std::string method;  ///< "constructive", "search" or "" when no witness
  bool impossible = false;
  std::optional<bool> regular;
  ThresholdConstant threshold;
  bool holds = false;
  std::vector<std::string> notes;
  friend bool operator==(const CriterionReport&, const CriterionReport&) = default;
};

struct CriterionOptions {
  bool check_regular = false;
  SearchOptions search;
};

CriterionReport criterion(const RootDatum& rd, long p, CriterionOptions opts = {});

}  // namespace iwahori
