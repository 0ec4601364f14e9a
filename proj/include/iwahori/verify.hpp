#pragma once

// Finite-level checks of the generation theorem and of the lemmas behind it.

#include <optional>
#include <string>
#include <vector>

#include "iwahori/closure.hpp"
#include "iwahori/generators.hpp"
#include "iwahori/modmatrix.hpp"
#include "iwahori/rootdata.hpp"

namespace iwahori {

struct FiniteMatrixGroup {
  std::vector<ModMatrix> generators;
  std::vector<ModMatrix> elements;  ///< in discovery order
  long modulus = 1;
  int depth = 0;
  std::size_t order() const { return elements.size(); }
};

FiniteMatrixGroup bfs_closure(const std::vector<ModMatrix>& gens, std::size_t bound,
                              Execution exec = Execution::Serial);

/// d with |G / Phi(G)| = p^d; G must be a fully enumerated p-group.
int frattini_rank(const FiniteMatrixGroup& g, long p, Execution exec = Execution::Serial);

/// Exponent e with n = p^e, if any.
std::optional<int> p_log(std::size_t n, long p);

struct DropOneResult {
  std::size_t dropped = 0;
  std::string generator;
  bool conclusive = true;
  std::size_t order = 0;
  bool proper = false;
  std::size_t index = 0;
  friend bool operator==(const DropOneResult&, const DropOneResult&) = default;
};

struct VerificationReport {
  std::string representation;
  int p = 0, k = 0;
  std::size_t generator_count = 0;
  std::optional<std::size_t> expected_order;
  std::size_t achieved_order = 0;
  bool faithful = true;    ///< the representation sees the whole level-k quotient
  bool conclusive = true;  ///< false after an element-bound overflow
  std::vector<DropOneResult> drop_one;
  std::optional<int> frattini_rank;
  bool pass = false;
  std::vector<std::string> notes;
  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

struct VerifyOptions {
  std::size_t bound = 5'000'000;
  bool drop_one = true;
  bool frattini = true;
  std::optional<std::size_t> only_drop;
  Execution exec = Execution::Parallel;
};

/// Closure of the theorem generators in G(Z/p^k) and the drop-one tests.
/// Simply connected type A uses the natural representation of SL_n, all
/// other data the adjoint representation.
VerificationReport verify_generation(const RootDatum& rd, int p, int k = 2, const VerifyOptions& opts = {});

struct IdentityCheck {
  std::string name;
  bool holds = false;
  /// Signed coefficients c of the right-hand side x_gamma(c * p^. * u^i v^j).
  std::vector<long> coefficients;
};

struct G2SpanReport {
  int p = 0, k = 0;
  std::size_t unipotent_order = 0;    ///< |U(F_p)|
  std::size_t simple_span_order = 0;  ///< |<x_alpha(1), x_beta(1)>|
  std::size_t index = 0;
  std::optional<std::size_t> with_delta_order;  ///< adding x_{alpha+beta}(1), p = 3 only
  std::vector<IdentityCheck> identities;
  /// [x_beta, x_{3alpha+beta}] is supported on 3alpha+2beta alone.
  bool erratum_support_ok = false;
  bool pass = false;
};

G2SpanReport verify_g2_span(int p, int k);

/// [[1,0],[1/x-1,1]] [[1,1],[0,1]] [[1,0],[x-1,1]] [[1,-1/x],[0,1]] = diag(x, 1/x)
/// for every x = 1 mod p in Z/p^k.
bool verify_torus_identity(long p, int k);

struct HasseResult {
  SimpleType type;
  std::size_t checked = 0;
  std::vector<int> counterexamples;  ///< positive roots gamma != alpha_max with no simple alpha, gamma+alpha in R
  bool holds() const { return counterexamples.empty(); }
};

HasseResult hasse_experiment(SimpleType t);

}  // namespace iwahori
