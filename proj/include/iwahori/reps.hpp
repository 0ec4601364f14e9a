#pragma once

// Exact matrix realizations over Z/p^k: the natural representation of SL_n
// and the adjoint representation of any root datum.

#include <tuple>
#include <utility>
#include <vector>

#include "iwahori/chevalley.hpp"
#include "iwahori/generators.hpp"
#include "iwahori/modmatrix.hpp"

namespace iwahori {

enum class RepKind { NaturalSL, Adjoint };

/// SL_n on (Z/p^k)^n, Borel upper triangular, roots of A_{n-1} as e_i - e_j.
class NaturalSL {
 public:
  NaturalSL(int n, long p, int k);

  int n() const { return n_; }
  long p() const { return p_; }
  long modulus() const { return q_; }
  const RootSystem& system() const { return rs_; }

  /// (i, j) with alpha = e_i - e_j.
  std::pair<int, int> root_indices(int root) const;
  ModMatrix x(int root, long t) const;
  /// alpha^vee(x) = diag(..., x at i, ..., x^-1 at j, ...)
  ModMatrix coroot(int root, long x) const;
  ModMatrix realize(const Generator& g) const;

 private:
  int n_;
  long p_, q_;
  RootSystem rs_;
};

std::vector<std::pair<Generator, ModMatrix>> natural_sl_generators(int n, long p, int k);

/// A sparse integer matrix, used for the divided powers (ad X)^m / m!.
struct SparseMatrix {
  struct Entry {
    int row, col;
    long val;
  };
  std::vector<Entry> entries;
};

/// The adjoint representation on Lie(G) with basis H_1..H_l, then the negative
/// roots from lowest to highest, then the positive roots by height.
class AdjointRep {
 public:
  AdjointRep(RootDatum rd, long p, int k);

  const RootDatum& datum() const { return rd_; }
  const RootSystem& system() const { return rd_.system(); }
  const StructureConstants& constants() const { return sc_; }
  int dimension() const { return dim_; }
  long p() const { return p_; }
  long modulus() const { return q_; }

  /// Basis position of the root space of `root`.
  int position(int root) const;
  /// ad X_root over the integers.
  const SparseMatrix& ad(int root) const { return divided_[static_cast<std::size_t>(root)][1]; }
  /// (ad X_root)^m / m!, m = 0..4.
  const std::vector<SparseMatrix>& divided_powers(int root) const { return divided_[static_cast<std::size_t>(root)]; }

  ModMatrix x(int root, long t) const;
  /// s(x) acting by x^<gamma, s> on the gamma root space.
  ModMatrix torus(const std::vector<long>& cochar, long x) const;
  ModMatrix realize(const Generator& g) const;
  /// Evaluate a normal-form unipotent word.
  ModMatrix evaluate(const UnipotentWord& w) const;

 private:
  RootDatum rd_;
  StructureConstants sc_;
  long p_, q_;
  int dim_;
  std::vector<std::vector<SparseMatrix>> divided_;
};

std::vector<std::pair<Generator, ModMatrix>> adjoint_generators(const RootDatum& rd, long p, int k);

enum class IwahoriClass { InI1, InI, Outside };

std::string to_string(IwahoriClass c);

/// Classification by the reduction mod p (natural SL only).
IwahoriClass reduce_and_classify(const ModMatrix& m, long p, RepKind kind = RepKind::NaturalSL);

struct LDU {
  ModMatrix lower, diagonal, upper;
};

/// m = lower * diagonal * upper with lower/upper unitriangular (natural SL only).
LDU ldu_factor(const ModMatrix& m, long p);

}  // namespace iwahori
