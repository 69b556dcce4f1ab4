#include "parind/level.hpp"

#include <set>

namespace parind {

RationalMatrix coset_representative(const RationalMatrix& x, const PrimeContext& ctx, Orientation o) {
  const RationalMatrix h = o == Orientation::Upper ? hermite_form(x, ctx.p) : lower_hermite_form(x, ctx.p);
  return h * reduce_matrix(inverse(h) * x, ctx);
}

std::uint64_t residue_code(const RationalMatrix& k, const PrimeContext& ctx) {
  const unsigned long mod = ctx.modulus().get_ui();
  std::uint64_t code = 0;
  for (int i = 0; i < k.rows(); ++i)
    for (int j = 0; j < k.cols(); ++j)
      code = code * mod + residue_mod(k(i, j), ctx.p, static_cast<unsigned long>(ctx.m)).get_ui();
  return code;
}

mpz_class gln_mod_order(int n, const PrimeContext& ctx) {
  const mpz_class lift = ipow(ctx.p, static_cast<unsigned long>((ctx.m - 1) * n * n));
  return lift * mpz_class(std::to_string(gln_order(n, static_cast<int>(ctx.p))));
}

CongruenceQuotient::CongruenceQuotient(int n, const PrimeContext& ctx, std::uint64_t guard) : n_(n), ctx_(ctx) {
  if (n < 1 || n > 4) throw DomainError("CongruenceQuotient: dimension must be in [1,4]");
  const mpz_class order = gln_mod_order(n, ctx);
  const mpz_class space = ipow(ctx.modulus().get_si(), static_cast<unsigned long>(n * n));
  if (order > guard || space > mpz_class(64) * guard)
    throw ResourceError("GL_" + std::to_string(n) + "(Z/" + ctx.modulus().get_str() + ") has " + order.get_str() +
                        " elements, guard is " + std::to_string(guard));
  const std::uint64_t mod = ctx.modulus().get_ui();
  const std::uint64_t total = space.get_ui();
  const int p = static_cast<int>(ctx.p);
  for (std::uint64_t code = 0; code < total; ++code) {
    FFMatrix red(n, p);
    std::uint64_t c = code;
    std::vector<std::uint64_t> digits(n * n);
    for (int k = n * n - 1; k >= 0; --k) {
      digits[k] = c % mod;
      c /= mod;
    }
    for (int k = 0; k < n * n; ++k) red.set(k / n, k % n, static_cast<int>(digits[k] % p));
    if (red.det() == 0) continue;
    RationalMatrix m(n, n);
    for (int k = 0; k < n * n; ++k) m(k / n, k % n) = Rational(static_cast<long>(digits[k]));
    index_.emplace(code, elements_.size());
    elements_.push_back(std::move(m));
  }
}

std::size_t CongruenceQuotient::index_of(const RationalMatrix& k) const {
  const auto it = index_.find(residue_code(k, ctx_));
  if (it == index_.end()) throw DomainError("CongruenceQuotient::index_of: not in GL_n(Z_p): " + to_string(k));
  return it->second;
}

std::vector<std::size_t> CongruenceQuotient::parabolic_indices(const BlockParabolic& p) const {
  std::vector<std::size_t> out;
  for (std::size_t idx = 0; idx < elements_.size(); ++idx) {
    const RationalMatrix& e = elements_[idx];
    bool inside = true;
    for (int i = 0; i < n_ && inside; ++i)
      for (int j = 0; j < n_ && inside; ++j)
        if (!p.in_parabolic(i, j) && !e(i, j).is_zero()) inside = false;
    if (inside) out.push_back(idx);
  }
  return out;
}

std::vector<RationalMatrix> enumerate_transversal_K0_mod_Km(int n, const PrimeContext& ctx, std::uint64_t guard) {
  return CongruenceQuotient(n, ctx, guard).elements();
}

std::vector<RationalMatrix> transversal_P_G_K(const BlockParabolic& p, const PrimeContext& ctx, std::uint64_t guard) {
  const CongruenceQuotient quot(p.n(), ctx, guard);
  const auto par = quot.parabolic_indices(p);
  std::vector<bool> seen(quot.size(), false);
  std::vector<RationalMatrix> reps;
  for (std::size_t idx = 0; idx < quot.size(); ++idx) {
    if (seen[idx]) continue;
    reps.push_back(quot.elements()[idx]);
    for (std::size_t q : par) seen[quot.index_of(quot.elements()[q] * quot.elements()[idx])] = true;
  }
  return reps;
}

std::size_t match_transversal(const RationalMatrix& k, const std::vector<RationalMatrix>& transversal,
                              const BlockParabolic& p, const PrimeContext& ctx) {
  std::optional<std::size_t> found;
  for (std::size_t j = 0; j < transversal.size(); ++j) {
    const RationalMatrix r = reduce_matrix(k * inverse(transversal[j]), ctx);
    bool inside = true;
    for (int a = 0; a < p.n() && inside; ++a)
      for (int b = 0; b < p.n() && inside; ++b)
        if (!p.in_parabolic(a, b) && !r(a, b).is_zero()) inside = false;
    if (!inside) continue;
    if (found) throw DomainError("match_transversal: transversal is not pairwise inequivalent");
    found = j;
  }
  if (!found) throw DomainError("match_transversal: no transversal element matches " + to_string(k));
  return *found;
}

std::vector<RationalMatrix> congruence_generators(int n, const PrimeContext& ctx) {
  const Rational pm(ctx.modulus());
  std::vector<RationalMatrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i != j) gens.push_back(elementary(n, i, j, pm));
    }
  for (int i = 0; i < n; ++i) {
    RationalMatrix d = identity<Rational>(n);
    d(i, i) = Rational(1) + pm;
    gens.push_back(d);
    if (ctx.p == 2 && ctx.m == 1) {
      d(i, i) = Rational(-1);
      gens.push_back(d);
    }
  }
  return gens;
}

}  // namespace parind
