#pragma once

#include <utility>
#include <vector>

#include "lefschetz/integer.hpp"

namespace lefschetz {

/// diagonal = left * input * right with left, right unimodular.
template <typename Scalar>
struct SmithDecomposition {
  IntMatrix<Scalar> diagonal;
  IntMatrix<Scalar> left;
  IntMatrix<Scalar> right;
  /// d_1 | d_2 | ... , min(rows, cols) entries, all >= 0, zeros last.
  std::vector<Scalar> invariant_factors;
};

namespace detail {

template <typename Scalar>
void swap_rows(IntMatrix<Scalar>& a, IntMatrix<Scalar>& u, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  a.row(i).swap(a.row(j));
  u.row(i).swap(u.row(j));
}

template <typename Scalar>
void swap_cols(IntMatrix<Scalar>& a, IntMatrix<Scalar>& v, Eigen::Index i, Eigen::Index j) {
  if (i == j) return;
  a.col(i).swap(a.col(j));
  v.col(i).swap(v.col(j));
}

// row_i -= q * row_j
template <typename Scalar>
void add_row_multiple(IntMatrix<Scalar>& a, IntMatrix<Scalar>& u, Eigen::Index i, Eigen::Index j, const Scalar& q) {
  if (q == 0) return;
  a.row(i) -= q * a.row(j);
  u.row(i) -= q * u.row(j);
}

template <typename Scalar>
void add_col_multiple(IntMatrix<Scalar>& a, IntMatrix<Scalar>& v, Eigen::Index i, Eigen::Index j, const Scalar& q) {
  if (q == 0) return;
  a.col(i) -= q * a.col(j);
  v.col(i) -= q * v.col(j);
}

}  // namespace detail

/// Smith normal form by pivoting on the smallest nonzero entry.
template <typename Derived>
SmithDecomposition<typename Derived::Scalar> smith_normal_form(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  using Index = Eigen::Index;
  const Index rows = input.rows(), cols = input.cols();

  SmithDecomposition<Scalar> out;
  IntMatrix<Scalar>& a = out.diagonal;
  IntMatrix<Scalar>& u = out.left;
  IntMatrix<Scalar>& v = out.right;
  a = input;
  u = IntMatrix<Scalar>::Identity(rows, rows);
  v = IntMatrix<Scalar>::Identity(cols, cols);

  const Index steps = std::min(rows, cols);
  for (Index t = 0; t < steps; ++t) {
    while (true) {
      // Smallest nonzero |entry| in the trailing block.
      Index pr = -1, pc = -1;
      Scalar best = 0;
      for (Index c = t; c < cols; ++c)
        for (Index r = t; r < rows; ++r) {
          if (a(r, c) == 0) continue;
          Scalar m = abs_value<Scalar>(a(r, c));
          if (pr < 0 || m < best) {
            best = m;
            pr = r;
            pc = c;
          }
        }
      if (pr < 0) break;  // trailing block is zero
      detail::swap_rows(a, u, t, pr);
      detail::swap_cols(a, v, t, pc);

      bool clean = true;
      for (Index r = t + 1; r < rows; ++r) {
        if (a(r, t) == 0) continue;
        Scalar q = a(r, t) / a(t, t);
        detail::add_row_multiple(a, u, r, t, q);
        if (a(r, t) != 0) clean = false;
      }
      for (Index c = t + 1; c < cols; ++c) {
        if (a(t, c) == 0) continue;
        Scalar q = a(t, c) / a(t, t);
        detail::add_col_multiple(a, v, c, t, q);
        if (a(t, c) != 0) clean = false;
      }
      if (!clean) continue;  // a smaller remainder now exists; re-pivot

      // Enforce divisibility: fold an offending row into the pivot row.
      Index bad = -1;
      for (Index r = t + 1; r < rows && bad < 0; ++r)
        for (Index c = t + 1; c < cols; ++c)
          if (a(r, c) % a(t, t) != 0) {
            bad = r;
            break;
          }
      if (bad < 0) break;
      detail::add_row_multiple(a, u, t, bad, Scalar(-1));
    }
    if (a(t, t) < 0) {
      a.row(t) *= Scalar(-1);
      u.row(t) *= Scalar(-1);
    }
  }

  out.invariant_factors.reserve(steps);
  for (Index t = 0; t < steps; ++t) out.invariant_factors.push_back(a(t, t));
  return out;
}

}  // namespace lefschetz
