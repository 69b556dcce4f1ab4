#pragma once

#include "parind/hecke.hpp"

#include <vector>

namespace parind {

/// chi(m) = prod_i z_i^{v_p(det m_i)} over the diagonal blocks m_i of m.
class UnramifiedCharacter {
public:
  explicit UnramifiedCharacter(std::vector<Rational> z);

  const std::vector<Rational>& parameters() const { return z_; }
  /// Value on an element of the Levi of p (blocks must match).
  Rational operator()(const RationalMatrix& m, const BlockParabolic& p, long prime) const;
  std::string str() const;

private:
  std::vector<Rational> z_;
};

/// Space of right K_m-invariant functions on G with f(q g) = tau(q) f(g),
/// with basis the characteristic functions of P g_j K_m.
struct InducedModel {
  BlockParabolic parabolic;
  PrimeContext ctx;
  std::vector<RationalMatrix> basis;

  InducedModel(const BlockParabolic& p, const PrimeContext& c, std::uint64_t guard = kDefaultGuard);
  std::size_t dimension() const { return basis.size(); }
};

/// sum_x c_x chi(x) for a measure on M.
RootPQ character_pairing(const UnramifiedCharacter& chi, const HeckeMeasure& h);

/// Matrix of pi(h) in the basis of the model; entry (i,j) is (pi(h) f_j)(g_i).
/// With `normalized`, the inducing character is chi * |lambda_P|^{1/2}.
Matrix<RootPQ> hecke_action_matrix(const HeckeMeasure& h, const UnramifiedCharacter& chi, const InducedModel& model,
                                   bool normalized = false);

RootPQ trace_induced(const HeckeMeasure& h, const UnramifiedCharacter& chi, const InducedModel& model,
                     bool normalized = false);

struct InducedCharacterRecord {
  RootPQ trace;
  RootPQ pairing;
  RootPQ trace_normalized;
  RootPQ pairing_normalized;
  bool holds() const { return trace == pairing && trace_normalized == pairing_normalized; }
};

/// Both sides of the induced character identity, unnormalized and normalized.
InducedCharacterRecord induced_character_sides(const HeckeMeasure& h, const UnramifiedCharacter& chi, const InducedModel& model);
bool verify_induced_character(const HeckeMeasure& h, const UnramifiedCharacter& chi, const BlockParabolic& p,
                     const PrimeContext& ctx);

}  // namespace parind
