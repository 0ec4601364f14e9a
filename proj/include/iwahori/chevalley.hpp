#pragma once

// Chevalley structure constants, the rank-two commutator formulas and exact
// arithmetic in U(Z/p^k) by collection.

#include <span>
#include <string>
#include <vector>

#include "iwahori/rootdata.hpp"

namespace iwahori {

struct ExtraspecialPair {
  int xi, alpha, beta;
};

/// [X_a, X_b] = N(a, b) X_{a+b}. Every extraspecial pair gets the positive
/// sign; everything else follows from the Jacobi identity.
class StructureConstants {
 public:
  static StructureConstants compute(const RootSystem& rs);

  const RootSystem& system() const { return rs_; }
  /// Zero when a + b is not a root.
  int N(int a, int b) const { return n_[static_cast<std::size_t>(a) * rs_.roots().size() + static_cast<std::size_t>(b)]; }
  const std::vector<ExtraspecialPair>& extraspecial() const { return extraspecial_; }

 private:
  RootSystem rs_;
  std::vector<int> n_;
  std::vector<ExtraspecialPair> extraspecial_;
};

/// One factor x_root(coeff * u^i * v^j) of a commutator.
struct CommutatorTerm {
  int root;
  int i, j;
  long coeff;
  friend bool operator==(const CommutatorTerm&, const CommutatorTerm&) = default;
};

/// [x_beta(v) : x_alpha(u)] = x_beta(v) x_alpha(u) x_beta(-v) x_alpha(-u)
/// as an ordered product (increasing i+j, then i). Valid for any
/// non-proportional pair, regardless of lengths.
std::vector<CommutatorTerm> commutator_terms(const StructureConstants& sc, int alpha, int beta);

struct CommutatorExpansion {
  int alpha, beta;
  RootChain chain;
  std::vector<CommutatorTerm> terms;
  friend bool operator==(const CommutatorExpansion&, const CommutatorExpansion&) = default;
};

/// Requires ||alpha|| <= ||beta||.
CommutatorExpansion commutator_expansion(const StructureConstants& sc, int alpha, int beta);

/// True when the (i, j) pattern and the coefficient magnitudes are those of
/// the rank-two table row selected by the chain data.
bool matches_table_row(const CommutatorExpansion& e);

/// levels[i-1] lists the positive roots of height >= i.
struct Filtration {
  std::vector<std::vector<int>> levels;
};

Filtration unipotent_filtration(const RootSystem& rs);

// ---------------------------------------------------------------------------

struct Letter {
  int root;
  long t;
};

/// Normal form prod_{gamma in R+} x_gamma(t_gamma), in root-index order.
struct UnipotentWord {
  long modulus = 0;
  std::vector<long> t;
  friend bool operator==(const UnipotentWord&, const UnipotentWord&) = default;
};

/// U(Z/p^k), or the quotient U/U_{m+1} when a height cap m is given.
class UnipotentGroup {
 public:
  UnipotentGroup(StructureConstants sc, long p, int k, int max_height = 0);

  const StructureConstants& constants() const { return sc_; }
  const RootSystem& system() const { return sc_.system(); }
  long p() const { return p_; }
  long modulus() const { return q_; }
  int max_height() const { return max_height_; }

  UnipotentWord identity() const;
  UnipotentWord letter(int root, long t) const;
  void mul_letter(UnipotentWord& w, int root, long t) const;
  UnipotentWord multiply(const UnipotentWord& a, const UnipotentWord& b) const;
  UnipotentWord inverse(const UnipotentWord& a) const;
  /// a b a^-1 b^-1
  UnipotentWord commutator(const UnipotentWord& a, const UnipotentWord& b) const;
  UnipotentWord collect(std::span<const Letter> letters) const;
  /// The letters of the normal form, in order, skipping zeros.
  std::vector<Letter> letters(const UnipotentWord& w) const;

 private:
  long reduce(long x) const { x %= q_; return x < 0 ? x + q_ : x; }

  StructureConstants sc_;
  long p_, q_;
  int max_height_;
  int npos_;
  std::vector<std::vector<CommutatorTerm>> terms_;  // [c * npos + b]: [x_c : x_b]
};

/// Collects a product of positive-root letters modulo p^k.
UnipotentWord collect_product(const StructureConstants& sc, std::span<const Letter> letters, long p, int k);

long checked_pow(long base, int exp);

}  // namespace iwahori
