#include "parind/padic.hpp"

#include "parind/errors.hpp"

#include <string>

namespace parind {

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeContext::PrimeContext(long prime, int level) : p(prime), m(level) {
  if (!is_prime(prime)) throw DomainError("PrimeContext: " + std::to_string(prime) + " is not prime");
  if (level < 1) throw DomainError("PrimeContext: level must be >= 1");
}

mpz_class PrimeContext::modulus() const { return ipow(p, static_cast<unsigned long>(m)); }

std::optional<long> padic_valuation(const mpz_class& x, long p) {
  if (x == 0) return std::nullopt;
  mpz_class r = x;
  const mpz_class pp(p);
  long v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), pp.get_mpz_t())) {
    r /= pp;
    ++v;
  }
  return v;
}

std::optional<long> padic_valuation(const Rational& x, long p) {
  if (x.is_zero()) return std::nullopt;
  return *padic_valuation(x.num(), p) - *padic_valuation(x.den(), p);
}

RootPQ sqrt_p_power(long p, long e) {
  // (sqrt p)^e = p^{floor(e/2)} * sqrt(p)^{e mod 2}
  const long half = (e >= 0) ? e / 2 : -((-e + 1) / 2);
  const long odd = e - 2 * half;
  Rational scale = pow(Rational(p), half);
  if (odd == 0) return RootPQ(scale, Rational(0), p);
  return RootPQ(Rational(0), scale, p);
}

RootPQ padic_norm_halfpower(const Rational& x, long p, long k) {
  const auto v = padic_valuation(x, p);
  if (!v) throw DomainError("padic_norm_halfpower: zero argument");
  return sqrt_p_power(p, -k * *v);
}

std::optional<long> min_entry_valuation(const RationalMatrix& g, long p) {
  std::optional<long> best;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      const auto v = padic_valuation(g(i, j), p);
      if (v && (!best || *v < *best)) best = v;
    }
  return best;
}

bool gln_zp_membership(const RationalMatrix& g, long p) {
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j) {
      const auto v = padic_valuation(g(i, j), p);
      if (v && *v < 0) return false;
    }
  const auto vd = padic_valuation(determinant(g), p);
  return vd && *vd == 0;
}

bool congruence_equiv(const RationalMatrix& x, const RationalMatrix& y, const PrimeContext& ctx) {
  const RationalMatrix d = inverse(x) * y;
  for (int i = 0; i < d.rows(); ++i)
    for (int j = 0; j < d.cols(); ++j) {
      const Rational e = d(i, j) - Rational(i == j ? 1 : 0);
      const auto v = padic_valuation(e, ctx.p);
      if (v && *v < ctx.m) return false;
    }
  return true;
}

mpz_class residue_mod(const Rational& x, long p, unsigned long e) {
  const mpz_class mod = ipow(p, e);
  const mpz_class den = x.den();
  if (mpz_divisible_ui_p(den.get_mpz_t(), static_cast<unsigned long>(p)))
    throw DomainError("residue_mod: argument is not p-integral");
  mpz_class inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (x.num() * inv) % mod;
  if (r < 0) r += mod;
  return r;
}

Rational canonical_mod(const Rational& x, long p, long e) {
  const auto v = padic_valuation(x, p);
  if (!v || *v >= e) return Rational(0);
  const long s = *v < 0 ? -*v : 0;
  const mpz_class ps = ipow(p, static_cast<unsigned long>(s));
  const mpz_class n = residue_mod(x * Rational(ps), p, static_cast<unsigned long>(e + s));
  return Rational(n, ps);
}

RationalMatrix reduce_matrix(const RationalMatrix& k, const PrimeContext& ctx) {
  RationalMatrix r(k.rows(), k.cols());
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < k.cols(); ++j)
      r(i, j) = Rational(residue_mod(k(i, j), ctx.p, static_cast<unsigned long>(ctx.m)));
  return r;
}

}  // namespace parind
