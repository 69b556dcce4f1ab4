#pragma once

#include "parind/finite_field.hpp"
#include "parind/matrix.hpp"
#include "parind/padic.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace parind {

enum class Orientation { Upper, Lower };

std::string to_string(Orientation o);
Orientation parse_orientation(const std::string& s);

/// Block parabolic P of GL_n attached to a composition (n_1, ..., n_k) of n.
/// Upper orientation: P is block upper triangular; lower: block lower
/// triangular.  M (block diagonal) does not depend on the orientation.
class BlockParabolic {
public:
  BlockParabolic(std::vector<int> blocks, Orientation orientation = Orientation::Upper);

  /// The Borel subgroup (all blocks of size one).
  static BlockParabolic borel(int n, Orientation o = Orientation::Upper);
  /// All compositions of n, in lexicographic order.
  static std::vector<std::vector<int>> compositions(int n);

  int n() const { return n_; }
  const std::vector<int>& blocks() const { return blocks_; }
  Orientation orientation() const { return orientation_; }
  int block_of(int index) const { return block_of_[index]; }
  /// First row/column index of block b.
  int block_start(int b) const { return starts_[b]; }

  BlockParabolic opposite() const;

  bool in_levi(int i, int j) const { return block_of_[i] == block_of_[j]; }
  bool in_parabolic(int i, int j) const;
  bool in_radical(int i, int j) const { return in_parabolic(i, j) && !in_levi(i, j); }
  int radical_dimension() const;

  bool contains(const RationalMatrix& g) const;
  bool levi_contains(const RationalMatrix& g) const;

  /// Projection P -> M: keep the diagonal blocks.
  RationalMatrix levi_part(const RationalMatrix& g) const;
  /// Diagonal block b of g.
  RationalMatrix block(const RationalMatrix& g, int b) const;

  std::string label() const;
  friend bool operator==(const BlockParabolic& a, const BlockParabolic& b) {
    return a.blocks_ == b.blocks_ && a.orientation_ == b.orientation_;
  }

private:
  int n_ = 0;
  std::vector<int> blocks_;
  Orientation orientation_;
  std::vector<int> block_of_;
  std::vector<int> starts_;
};

/// Closed subgroups H of GL_n for which the discriminant is implemented:
/// all of G, the diagonal torus, and the Levi, parabolic or unipotent radical
/// of a block parabolic.
class SubgroupSpec {
public:
  enum class Kind { Whole, Torus, Levi, Parabolic, Radical };

  static SubgroupSpec whole(int n) { return SubgroupSpec(Kind::Whole, n, std::nullopt); }
  static SubgroupSpec torus(int n) { return SubgroupSpec(Kind::Torus, n, std::nullopt); }
  static SubgroupSpec levi(const BlockParabolic& p) { return SubgroupSpec(Kind::Levi, p.n(), p); }
  static SubgroupSpec parabolic(const BlockParabolic& p) { return SubgroupSpec(Kind::Parabolic, p.n(), p); }
  static SubgroupSpec radical(const BlockParabolic& p) { return SubgroupSpec(Kind::Radical, p.n(), p); }

  Kind kind() const { return kind_; }
  int n() const { return n_; }
  const std::optional<BlockParabolic>& parabolic() const { return parabolic_; }

  /// Matrix-entry coordinate (i,j) belongs to Lie H.
  bool has_coordinate(int i, int j) const;
  /// Lie H coordinates in row-major order.
  std::vector<std::pair<int, int>> coordinates() const;
  /// g lies in H(Q) (pattern and invertibility; for Radical also unipotent diagonal blocks).
  bool contains(const RationalMatrix& g) const;
  std::string label() const;

private:
  SubgroupSpec(Kind k, int n, std::optional<BlockParabolic> p) : kind_(k), n_(n), parabolic_(std::move(p)) {}
  Kind kind_;
  int n_;
  std::optional<BlockParabolic> parabolic_;
};

/// Elementary symmetric functions e_1..e_n of the eigenvalues, so that
/// det(t - g) = t^n - e_1 t^{n-1} + ... + (-1)^n e_n.  (e_1, e_n) = (trace, det).
struct ChevalleyPoint {
  std::vector<Rational> coefficients;
  friend bool operator==(const ChevalleyPoint&, const ChevalleyPoint&) = default;
};

/// Characteristic polynomial coefficients.  DomainError on singular input.
ChevalleyPoint chevalley_map(const RationalMatrix& g);

/// Ad(g) as an n^2 x n^2 matrix in the basis E_ij (index i*n + j).
RationalMatrix ad_matrix(const RationalMatrix& g);

/// det(Ad(g^{-1}) - 1) on Lie(outer)/Lie(inner), with inner a subgroup of outer.
Rational relative_discriminant(const SubgroupSpec& outer, const SubgroupSpec& inner, const RationalMatrix& g);

/// Delta_{H,G}(g) = det(Ad g^{-1} - 1, Lie G / Lie H).  DomainError if g is not in H.
Rational discriminant_delta(const SubgroupSpec& h, const RationalMatrix& g);

/// lambda_P(g) = det(Ad g | Lie P).  DomainError if g is not in P.
Rational modulus_lambda(const BlockParabolic& p, const RationalMatrix& g);

bool is_regular(const SubgroupSpec& h, const RationalMatrix& g);

/// Delta_{P,G}(m)^2 == (-1)^{dim U} Delta_{M,G}(m) lambda_P(m), evaluated exactly.
bool parabolic_discriminant_check(const BlockParabolic& p, const RationalMatrix& m);

/// Column Hermite form over Z_(p): the unique upper triangular H with
/// diagonal entries p^{a_i} and above-diagonal entries reduced by
/// canonical_mod, such that g = H k with k in GL_n(Z_p).
RationalMatrix hermite_form(const RationalMatrix& g, long p);

/// Lower triangular analogue of hermite_form (conjugated by the long Weyl element).
RationalMatrix lower_hermite_form(const RationalMatrix& g, long p);

struct IwasawaFactors {
  RationalMatrix q;  ///< in P(Q) (in fact in the Borel of the same orientation)
  RationalMatrix k;  ///< in GL_n(Z_p), with g = q k
};

IwasawaFactors iwasawa_decompose(const RationalMatrix& g, const BlockParabolic& p, long prime);

/// Integer partition, parts sorted in non-increasing order.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  Partition transpose() const;
  /// this >= other in the dominance order (same size required).
  bool dominates(const Partition& other) const;
  std::string str() const;

  /// All partitions of n, in reverse lexicographic order.
  static std::vector<Partition> all(int n);
  static Partition parse(const std::string& s);

  friend auto operator<=>(const Partition&, const Partition&) = default;

private:
  std::vector<int> parts_;
};

/// Jordan type of a unipotent matrix over F_q from the ranks of (u-1)^k.
/// DomainError if u is not unipotent.
Partition jordan_type(const FFMatrix& u);

}  // namespace parind
