#pragma once

#include "parind/group_geometry.hpp"
#include "parind/padic.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace parind {

inline constexpr std::uint64_t kDefaultGuard = 1'000'000;

/// Canonical representative of the coset x K_m.  Two matrices get the same
/// representative iff they are congruence_equiv.  With Upper orientation the
/// representative of an element of an upper block parabolic (or of a Levi)
/// stays in that subgroup; Lower does the same for lower block parabolics.
RationalMatrix coset_representative(const RationalMatrix& x, const PrimeContext& ctx,
                                    Orientation o = Orientation::Upper);

/// Base p^m code of the reduction of a p-integral matrix.
std::uint64_t residue_code(const RationalMatrix& k, const PrimeContext& ctx);

/// |GL_n(Z/p^m)|.
mpz_class gln_mod_order(int n, const PrimeContext& ctx);

/// GL_n(Z/p^m) realised as integer matrices with entries in [0, p^m).
class CongruenceQuotient {
public:
  CongruenceQuotient(int n, const PrimeContext& ctx, std::uint64_t guard = kDefaultGuard);

  int n() const { return n_; }
  const PrimeContext& context() const { return ctx_; }
  const std::vector<RationalMatrix>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  /// Index of the element congruent to k modulo p^m (k in GL_n(Z_p)).
  std::size_t index_of(const RationalMatrix& k) const;
  /// Elements whose reduction lies in P(Z/p^m).
  std::vector<std::size_t> parabolic_indices(const BlockParabolic& p) const;

private:
  int n_;
  PrimeContext ctx_;
  std::vector<RationalMatrix> elements_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Exact transversal of K_0 / K_m.  ResourceError past the guard.
std::vector<RationalMatrix> enumerate_transversal_K0_mod_Km(int n, const PrimeContext& ctx,
                                                            std::uint64_t guard = kDefaultGuard);

/// Representatives in K_0 of P \ G / K_m, one per orbit of P(Z/p^m) acting on
/// GL_n(Z/p^m) from the left, in order of first appearance.
std::vector<RationalMatrix> transversal_P_G_K(const BlockParabolic& p, const PrimeContext& ctx,
                                              std::uint64_t guard = kDefaultGuard);

/// Index j with k in (P cap K_0) A_j K_m, for the transversal produced above.
std::size_t match_transversal(const RationalMatrix& k, const std::vector<RationalMatrix>& transversal,
                              const BlockParabolic& p, const PrimeContext& ctx);

/// Topological generators of K_m used for invariance checks.
std::vector<RationalMatrix> congruence_generators(int n, const PrimeContext& ctx);

}  // namespace parind
