#pragma once

// Exact dense linear algebra over a field. The routines only test entries
// against zero with operator==, so they are meaningful for exact scalar
// types (Rational); they compile for floating types but carry no tolerance.

#include <optional>
#include <type_traits>
#include <utility>

#include "convexcheck/scalar.hpp"

namespace convexcheck {

namespace detail {

// Scales every row by the lcm of its denominators so that Bareiss
// elimination runs over integers.
inline void clear_denominators(MatrixX<Rational>& m) {
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Integer scale = 1;
    for (Eigen::Index c = 0; c < m.cols(); ++c) {
      scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(m(r, c)));
    }
    m.row(r) *= Rational(scale);
  }
}

}  // namespace detail

/// Rank by fraction-free (Bareiss) elimination. Every intermediate division
/// is exact, so rational input stays integral after the initial scaling.
template <typename Scalar>
Eigen::Index exact_rank(MatrixX<Scalar> m) {
  if constexpr (std::is_same_v<Scalar, Rational>) detail::clear_denominators(m);
  const Eigen::Index rows = m.rows();
  const Eigen::Index cols = m.cols();
  Scalar previous_pivot(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) continue;
    m.row(rank).swap(m.row(pivot));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c) {
        m(r, c) = (m(rank, col) * m(r, c) - m(r, col) * m(rank, c)) / previous_pivot;
      }
      m(r, col) = Scalar(0);
    }
    previous_pivot = m(rank, col);
    ++rank;
  }
  return rank;
}

/// Solves a x = b for a matrix with full column rank. Returns nullopt when
/// the system is inconsistent (b outside the column space).
template <typename Scalar>
std::optional<VectorX<Scalar>> solve_exact(MatrixX<Scalar> a, VectorX<Scalar> b) {
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < cols; ++col) {
    Eigen::Index pivot = row;
    while (pivot < rows && a(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == rows) return std::nullopt;
    a.row(row).swap(a.row(pivot));
    std::swap(b[row], b[pivot]);
    const Scalar inv = Scalar(1) / a(row, col);
    a.row(row) *= inv;
    b[row] *= inv;
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || a(r, col) == Scalar(0)) continue;
      const Scalar factor = a(r, col);
      a.row(r) -= factor * a.row(row);
      b[r] -= factor * b[row];
    }
    ++row;
  }
  for (Eigen::Index r = row; r < rows; ++r) {
    if (b[r] != Scalar(0)) return std::nullopt;
  }
  return VectorX<Scalar>(b.head(cols));
}

/// Determinant of the 2x2 matrix [a b].
template <typename Scalar>
Scalar cross2(const VectorX<Scalar>& a, const VectorX<Scalar>& b) {
  return a[0] * b[1] - a[1] * b[0];
}

/// True when x is a scalar multiple of direction (all 2x2 minors vanish).
template <typename Scalar>
bool is_parallel(const VectorX<Scalar>& x, const VectorX<Scalar>& direction) {
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    for (Eigen::Index j = i + 1; j < x.size(); ++j) {
      if (x[i] * direction[j] - x[j] * direction[i] != Scalar(0)) return false;
    }
  }
  return true;
}

}  // namespace convexcheck
