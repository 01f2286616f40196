#pragma once

#include <optional>
#include <vector>

#include "core/rational.hpp"

namespace su3t {

/// Dense row-major matrix over the scalar layer.  Sized for the small systems
/// here (<= 50 x 43); no attempt at blocking or pivot scaling.
template <class S>
struct Matrix {
  int rows = 0, cols = 0;
  std::vector<S> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, S(0)) {}

  S& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const S& operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = S(1);
    return m;
  }
};

namespace detail {

template <class S>
int pick_pivot(const Matrix<S>& m, int col, int from) {
  if constexpr (ScalarOps<S>::exact) {
    for (int i = from; i < m.rows; ++i)
      if (m(i, col) != S(0)) return i;
    return -1;
  } else {
    int best = -1;
    double mag = 0.0;
    for (int i = from; i < m.rows; ++i) {
      double v = ScalarOps<S>::abs_double(m(i, col));
      if (v > mag) {
        mag = v;
        best = i;
      }
    }
    // near-zero pivots treated as rank drop
    return (best >= 0 && mag > 1e-13) ? best : -1;
  }
}

}  // namespace detail

/// Row-reduce in place; returns pivot columns.  Works on the augmented part too.
template <class S>
std::vector<int> rref(Matrix<S>& m, int active_cols) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < active_cols && r < m.rows; ++c) {
    int p = detail::pick_pivot(m, c, r);
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m(p, j), m(r, j));
    S pv = m(r, c);
    for (int j = 0; j < m.cols; ++j) m(r, j) /= pv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r) continue;
      S f = m(i, c);
      if (ScalarOps<S>::is_zero(f)) continue;
      for (int j = 0; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
int rank(Matrix<S> m) {
  return static_cast<int>(rref(m, m.cols).size());
}

/// Solve A x = b for square invertible A.
template <class S>
std::optional<std::vector<S>> solve(const Matrix<S>& A, const std::vector<S>& b) {
  Matrix<S> m(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
    m(i, A.cols) = b[i];
  }
  auto piv = rref(m, A.cols);
  if (static_cast<int>(piv.size()) != A.cols) return std::nullopt;
  std::vector<S> x(A.cols, S(0));
  for (int i = 0; i < A.cols; ++i) x[piv[i]] = m(i, A.cols);
  return x;
}

template <class S>
std::optional<Matrix<S>> inverse(const Matrix<S>& A) {
  Matrix<S> m(A.rows, 2 * A.cols);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) m(i, j) = A(i, j);
    m(i, A.cols + i) = S(1);
  }
  auto piv = rref(m, A.cols);
  if (static_cast<int>(piv.size()) != A.cols) return std::nullopt;
  Matrix<S> inv(A.rows, A.cols);
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) inv(i, j) = m(i, A.cols + j);
  return inv;
}

template <class S>
std::vector<S> matvec(const Matrix<S>& A, const std::vector<S>& x) {
  std::vector<S> y(A.rows, S(0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j)
      if (!ScalarOps<S>::is_zero(A(i, j))) y[i] += A(i, j) * x[j];
  return y;
}

}  // namespace su3t
