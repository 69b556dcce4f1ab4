#pragma once

#include "parind/characters.hpp"
#include "parind/hecke.hpp"

#include <string>
#include <vector>

namespace parind {

/// Diagonal element with pairwise distinct rational eigenvalues.
class RegularElement {
public:
  explicit RegularElement(std::vector<Rational> eigenvalues);
  /// diag(p^{v1}, p^{v2} u) with u = 1 + p when v1 == v2 (so the eigenvalues differ), else u = 1.
  static RegularElement grid_point(long p, long v1, long v2);

  const RationalMatrix& matrix() const { return gamma_; }
  const std::vector<Rational>& eigenvalues() const { return eigenvalues_; }
  std::vector<long> valuations(long p) const;
  std::string str() const;

private:
  std::vector<Rational> eigenvalues_;
  RationalMatrix gamma_;
};

/// Regular grid with valuations in [lo, hi]^2, row-major.
std::vector<RegularElement> regular_grid(long p, long lo, long hi);

struct OrbitalNormalization {
  std::string group_measure = "K_m has mass 1";
  std::string torus_measure = "T cap K_m has mass 1";
  /// The integral over T\G is multiplied by |Delta_{T,G}(gamma)|.
  bool discriminant_weighted = true;
  int rational_torus_forms = 1;
};

/// Why the enumeration is complete: classes T u(p^{-k}) K_0 with k > max_k
/// conjugate gamma outside the valuation window of the support.
struct OrbitalCertificate {
  long support_min_valuation = 0;
  long max_k = -1;
  std::size_t classes_enumerated = 0;
  std::string reason;
};

struct OrbitalValue {
  RootPQ value;
  OrbitalNormalization normalization;
  OrbitalCertificate certificate;
};

/// O_gamma(h).  For h on GL_2: |Delta_{T,G}(gamma)| * sum over T\G/K_m of
/// c * vol.  For h on the diagonal torus (Levi of the Borel): the coefficient
/// at gamma.  UnsupportedError outside these cases.
OrbitalValue orbital_integral(const HeckeMeasure& h, const RegularElement& gamma);

/// Sum over rational forms of the torus; for split tori in GL_n there is one.
OrbitalValue stable_orbital(const HeckeMeasure& h, const RegularElement& gamma);

struct DescentRecord {
  RootPQ lhs;
  RootPQ rhs;
  bool holds() const { return lhs == rhs; }
};

/// O^G_gamma(h) against |Delta_{M,G}(gamma)|^{e/2} O^M_gamma(r_P h).  The
/// correct identity uses e = 1; `discriminant_exponent` = 2 is the mutation.
DescentRecord descent_sides(const HeckeMeasure& h, const RegularElement& gamma, const BlockParabolic& p,
                            long discriminant_exponent = 1);
bool descent_check(const HeckeMeasure& h, const RegularElement& gamma, const BlockParabolic& p,
                   long discriminant_exponent = 1);

/// Matrix [O_{gamma_j}(h_i)].
Matrix<RootPQ> orbital_matrix(const std::vector<HeckeMeasure>& hs, const std::vector<RegularElement>& gammas);

/// Rank over Q(sqrt p) of the orbital pairing matrix.
int separation_rank(const std::vector<HeckeMeasure>& hs, const std::vector<RegularElement>& gammas);

/// Matrix [trace of h_i on the normalized induction of chi_j through P].
Matrix<RootPQ> character_matrix(const std::vector<HeckeMeasure>& hs, const std::vector<UnramifiedCharacter>& chis,
                                const BlockParabolic& p);

/// Vectors c with sum_i c_i h_i annihilated by every column of both matrices (basis of the joint kernel).
Matrix<RootPQ> joint_annihilator(const Matrix<RootPQ>& a, const Matrix<RootPQ>& b);

}  // namespace parind
