#include "iwahori/smith.hpp"

#include <utility>

#include "iwahori/error.hpp"

namespace iwahori {

MpzMatrix MpzMatrix::identity(std::size_t n) {
  MpzMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

MpzMatrix operator*(const MpzMatrix& x, const MpzMatrix& y) {
  ensure(x.cols == y.rows, "MpzMatrix: shape mismatch");
  MpzMatrix z(x.rows, y.cols);
  for (std::size_t i = 0; i < x.rows; ++i)
    for (std::size_t k = 0; k < x.cols; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < y.cols; ++j) z(i, j) += x(i, k) * y(k, j);
    }
  return z;
}

namespace {

// Row operations are mirrored on U (left) and, inverted, on U^{-1} (as
// column operations); column operations are mirrored on V.
struct Reducer {
  MpzMatrix D, U, Uinv, V;

  void swap_rows(std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < D.cols; ++c) std::swap(D(i, c), D(j, c));
    for (std::size_t c = 0; c < U.cols; ++c) std::swap(U(i, c), U(j, c));
    for (std::size_t r = 0; r < Uinv.rows; ++r) std::swap(Uinv(r, i), Uinv(r, j));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < D.rows; ++r) std::swap(D(r, i), D(r, j));
    for (std::size_t r = 0; r < V.rows; ++r) std::swap(V(r, i), V(r, j));
  }
  // row_i += q * row_j
  void add_row(std::size_t i, std::size_t j, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t c = 0; c < D.cols; ++c) D(i, c) += q * D(j, c);
    for (std::size_t c = 0; c < U.cols; ++c) U(i, c) += q * U(j, c);
    for (std::size_t r = 0; r < Uinv.rows; ++r) Uinv(r, j) -= q * Uinv(r, i);
  }
  // col_i += q * col_j
  void add_col(std::size_t i, std::size_t j, const mpz_class& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < D.rows; ++r) D(r, i) += q * D(r, j);
    for (std::size_t r = 0; r < V.rows; ++r) V(r, i) += q * V(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < D.cols; ++c) D(i, c) = -D(i, c);
    for (std::size_t c = 0; c < U.cols; ++c) U(i, c) = -U(i, c);
    for (std::size_t r = 0; r < Uinv.rows; ++r) Uinv(r, i) = -Uinv(r, i);
  }
};

mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

SmithForm smith_normal_form(const MpzMatrix& A) {
  Reducer st{A, MpzMatrix::identity(A.rows), MpzMatrix::identity(A.rows),
             MpzMatrix::identity(A.cols)};
  auto& D = st.D;
  const std::size_t m = A.rows, n = A.cols;
  const std::size_t k_max = std::min(m, n);

  for (std::size_t t = 0; t < k_max; ++t) {
    // Pick the nonzero entry of least absolute value in the trailing block.
    bool again = true;
    while (again) {
      again = false;
      std::size_t pi = m, pj = n;
      for (std::size_t i = t; i < m; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (D(i, j) != 0 && (pi == m || abs(D(i, j)) < abs(D(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi == m) break;  // trailing block is zero
      if (pi != t) st.swap_rows(t, pi);
      if (pj != t) st.swap_cols(t, pj);

      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        st.add_row(i, t, -floor_div(D(i, t), D(t, t)));
        if (D(i, t) != 0) again = true;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        st.add_col(j, t, -floor_div(D(t, j), D(t, t)));
        if (D(t, j) != 0) again = true;
      }
      if (again) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      for (std::size_t i = t + 1; i < m && !again; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            st.add_row(t, i, 1);
            again = true;
            break;
          }
    }
    if (D(t, t) < 0) st.negate_row(t);
  }

  SmithForm out;
  out.diagonal.resize(k_max);
  for (std::size_t t = 0; t < k_max; ++t) out.diagonal[t] = D(t, t);
  out.left = std::move(st.U);
  out.left_inverse = std::move(st.Uinv);
  out.right = std::move(st.V);
  return out;
}

}  // namespace iwahori
