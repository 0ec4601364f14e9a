#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace iwahori {

struct MpzMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<mpz_class> a;

  MpzMatrix() = default;
  MpzMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  static MpzMatrix identity(std::size_t n);

  mpz_class& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const mpz_class& operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
  friend MpzMatrix operator*(const MpzMatrix& x, const MpzMatrix& y);
  friend bool operator==(const MpzMatrix&, const MpzMatrix&) = default;
};

/// U * A * V = D with U, V unimodular and D diagonal, d_1 | d_2 | ...,
/// all d_i >= 0. `left_inverse` is U^{-1}; its columns are the basis of
/// Z^rows adapted to the column span of A.
struct SmithForm {
  std::vector<mpz_class> diagonal;  // length min(rows, cols)
  MpzMatrix left, left_inverse, right;
};

SmithForm smith_normal_form(const MpzMatrix& A);

}  // namespace iwahori
