#pragma once

#include "parind/errors.hpp"

#include <Eigen/Core>

#include <cstdint>
#include <string>
#include <vector>

namespace parind {

/// Small square matrix over the prime field F_q (n <= 4).
class FFMatrix {
public:
  using Storage = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic, 0, 4, 4>;

  FFMatrix(int n, int q);
  FFMatrix(int q, const Storage& entries);

  static FFMatrix identity(int n, int q);
  /// Inverse of `encode`.
  static FFMatrix decode(std::uint64_t code, int n, int q);

  int n() const { return static_cast<int>(a_.rows()); }
  int q() const { return q_; }
  int operator()(int i, int j) const { return a_(i, j); }
  void set(int i, int j, int v);
  const Storage& entries() const { return a_; }

  /// Base-q integer code of the row-major entries; a bijection onto [0, q^{n^2}).
  std::uint64_t encode() const;

  int det() const;
  int rank() const;
  FFMatrix inverse() const;
  bool is_identity() const;

  friend FFMatrix operator*(const FFMatrix& x, const FFMatrix& y);
  friend FFMatrix operator-(const FFMatrix& x, const FFMatrix& y);
  friend bool operator==(const FFMatrix& x, const FFMatrix& y) {
    return x.q_ == y.q_ && x.a_ == y.a_;
  }

  std::string str() const;

private:
  int q_;
  Storage a_;
};

int mod_inverse(int a, int q);

/// |GL_n(F_q)| as an exact 64-bit integer.
std::uint64_t gln_order(int n, int q);

/// All invertible n x n matrices over F_q, each exactly once (ordered by code).
/// ResourceError when |GL_n(F_q)| exceeds `guard`.
std::vector<FFMatrix> enumerate_gln_fq(int n, int q, std::uint64_t guard = 1'000'000);

}  // namespace parind
