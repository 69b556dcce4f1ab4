#pragma once

#include "parind/matrix.hpp"
#include "parind/rational.hpp"
#include "parind/root_p.hpp"

#include <optional>

namespace parind {

/// Prime p together with the congruence level m of K_m = ker(GL_n(Z_p) -> GL_n(Z/p^m)).
struct PrimeContext {
  long p;
  int m;

  PrimeContext(long prime, int level);
  /// p^m as an integer.
  mpz_class modulus() const;
  friend bool operator==(const PrimeContext&, const PrimeContext&) = default;
};

bool is_prime(long n);

/// p-adic valuation; std::nullopt encodes +infinity (x == 0).
std::optional<long> padic_valuation(const Rational& x, long p);
std::optional<long> padic_valuation(const mpz_class& x, long p);

/// |x|_p^{k/2} = p^{-k v_p(x)/2} as an element of Q(sqrt p).  DomainError on x == 0.
RootPQ padic_norm_halfpower(const Rational& x, long p, long k);

/// (sqrt p)^e as an element of Q(sqrt p), any integer e.
RootPQ sqrt_p_power(long p, long e);

/// Smallest valuation among the entries; nullopt for the zero matrix.
std::optional<long> min_entry_valuation(const RationalMatrix& g, long p);

/// Membership in GL_n(Z_p): integral entries and unit determinant.
bool gln_zp_membership(const RationalMatrix& g, long p);

/// x^{-1} y lies in K_m.
bool congruence_equiv(const RationalMatrix& x, const RationalMatrix& y, const PrimeContext& ctx);

/// Residue of a p-integral rational modulo p^e, in [0, p^e).
mpz_class residue_mod(const Rational& x, long p, unsigned long e);

/// Canonical representative of the class of x in Q_p / p^e Z_p: either 0 or
/// N / p^s with s = max(0, -v_p(x)) and 0 <= N < p^{e+s}.
Rational canonical_mod(const Rational& x, long p, long e);

/// Entrywise reduction of a p-integral matrix into [0, p^m).
RationalMatrix reduce_matrix(const RationalMatrix& k, const PrimeContext& ctx);

}  // namespace parind
