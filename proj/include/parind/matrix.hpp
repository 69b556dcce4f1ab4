#pragma once

#include "parind/errors.hpp"
#include "parind/rational.hpp"
#include "parind/root_p.hpp"

#include <Eigen/Core>

#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace parind {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = Matrix<Rational>;

template <typename Scalar>
Matrix<Scalar> identity(int n) {
  Matrix<Scalar> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = Scalar(i == j ? 1 : 0);
  return m;
}

template <typename Scalar>
Matrix<Scalar> zeros(int rows, int cols) {
  Matrix<Scalar> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Scalar(0);
  return m;
}

/// Row echelon reduction over an exact field.  Returns the rank; `det_out`
/// (square input only) receives the determinant.
template <typename Scalar>
int gaussian_eliminate(Matrix<Scalar>& a, Scalar* det_out = nullptr) {
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  Scalar det(1);
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (!(a(r, c) == Scalar(0))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) {
      det = Scalar(0);
      continue;
    }
    if (pivot != rank) {
      a.row(pivot).swap(a.row(rank));
      det = -det;
    }
    const Scalar inv = Scalar(1) / a(rank, c);
    det *= a(rank, c);
    for (int r = rank + 1; r < rows; ++r) {
      if (a(r, c) == Scalar(0)) continue;
      const Scalar f = a(r, c) * inv;
      for (int k = c; k < cols; ++k) a(r, k) -= f * a(rank, k);
    }
    ++rank;
  }
  if (det_out) *det_out = (rows == cols && rank == rows) ? det : Scalar(0);
  return rank;
}

template <typename Scalar>
Scalar determinant(Matrix<Scalar> a) {
  if (a.rows() != a.cols()) throw DomainError("determinant of a non-square matrix");
  if (a.rows() == 0) return Scalar(1);
  Scalar det(0);
  gaussian_eliminate(a, &det);
  return det;
}

template <typename Scalar>
int rank(Matrix<Scalar> a) {
  return gaussian_eliminate(a);
}

/// Gauss-Jordan inverse; throws DomainError on singular input.
template <typename Scalar>
Matrix<Scalar> inverse(const Matrix<Scalar>& m) {
  const int n = static_cast<int>(m.rows());
  if (m.cols() != n) throw DomainError("inverse of a non-square matrix");
  Matrix<Scalar> a = m;
  Matrix<Scalar> inv = identity<Scalar>(n);
  for (int c = 0; c < n; ++c) {
    int pivot = -1;
    for (int r = c; r < n; ++r) {
      if (!(a(r, c) == Scalar(0))) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) throw DomainError("inverse of a singular matrix");
    a.row(pivot).swap(a.row(c));
    inv.row(pivot).swap(inv.row(c));
    const Scalar s = Scalar(1) / a(c, c);
    a.row(c) *= s;
    inv.row(c) *= s;
    for (int r = 0; r < n; ++r) {
      if (r == c || a(r, c) == Scalar(0)) continue;
      const Scalar f = a(r, c);
      a.row(r) -= f * a.row(c);
      inv.row(r) -= f * inv.row(c);
    }
  }
  return inv;
}

/// Nullspace basis (as columns) over an exact field.
template <typename Scalar>
Matrix<Scalar> nullspace(const Matrix<Scalar>& m) {
  Matrix<Scalar> a = m;
  const int rows = static_cast<int>(a.rows());
  const int cols = static_cast<int>(a.cols());
  std::vector<int> pivot_cols;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int pivot = -1;
    for (int i = r; i < rows; ++i) {
      if (!(a(i, c) == Scalar(0))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    a.row(pivot).swap(a.row(r));
    const Scalar s = Scalar(1) / a(r, c);
    a.row(r) *= s;
    for (int i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == Scalar(0)) continue;
      const Scalar f = a(i, c);
      a.row(i) -= f * a.row(r);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_cols) is_pivot[c] = true;
  std::vector<int> free_cols;
  for (int c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix<Scalar> basis = zeros<Scalar>(cols, static_cast<int>(free_cols.size()));
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(free_cols[k], static_cast<int>(k)) = Scalar(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      basis(pivot_cols[i], static_cast<int>(k)) = -a(static_cast<int>(i), free_cols[k]);
  }
  return basis;
}

/// Lexicographic (row-major) ordering, used to key coset labels.
template <typename Scalar>
std::strong_ordering lex_compare(const Matrix<Scalar>& x, const Matrix<Scalar>& y) {
  if (auto c = x.rows() <=> y.rows(); c != 0) return c;
  if (auto c = x.cols() <=> y.cols(); c != 0) return c;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (auto c = x(i, j) <=> y(i, j); c != 0) return c;
  return std::strong_ordering::equal;
}

template <typename Scalar>
bool equal(const Matrix<Scalar>& x, const Matrix<Scalar>& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (int i = 0; i < x.rows(); ++i)
    for (int j = 0; j < x.cols(); ++j)
      if (!(x(i, j) == y(i, j))) return false;
  return true;
}

/// Builds a rational matrix from nested initializer rows of integers.
RationalMatrix make_matrix(std::initializer_list<std::initializer_list<Rational>> rows);
RationalMatrix diagonal(const std::vector<Rational>& entries);
/// Elementary matrix 1 + c*E_ij.
RationalMatrix elementary(int n, int i, int j, const Rational& c);
/// Row-major rational strings, e.g. [["1","1/2"],["0","1"]].
std::vector<std::vector<std::string>> to_strings(const RationalMatrix& m);
RationalMatrix from_strings(const std::vector<std::vector<std::string>>& rows);
std::string to_string(const RationalMatrix& m);

}  // namespace parind
