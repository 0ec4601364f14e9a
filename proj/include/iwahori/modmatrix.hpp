#pragma once

// Square matrices over Z/q with entries kept as least nonnegative residues.

#include <cstdint>
#include <functional>
#include <vector>

namespace iwahori {

long mod_reduce(long x, long q);
long mod_inverse(long a, long q);  ///< throws DomainError when a is not a unit
long mod_pow(long a, long e, long q);  ///< negative e allowed for units

struct ModMatrix {
  int n = 0;
  long modulus = 1;
  std::vector<long> a;  // row-major

  static ModMatrix identity(int n, long q);
  static ModMatrix zero(int n, long q);

  long& operator()(int i, int j) { return a[static_cast<std::size_t>(i * n + j)]; }
  long operator()(int i, int j) const { return a[static_cast<std::size_t>(i * n + j)]; }

  ModMatrix operator*(const ModMatrix& o) const;
  ModMatrix inverse() const;
  ModMatrix pow(long e) const;
  bool is_identity() const;

  friend bool operator==(const ModMatrix&, const ModMatrix&) = default;
};

ModMatrix commutator(const ModMatrix& g, const ModMatrix& h);  ///< g h g^-1 h^-1

struct ModMatrixHash {
  std::size_t operator()(const ModMatrix& m) const noexcept;
};

}  // namespace iwahori
