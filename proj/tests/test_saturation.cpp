#include "doctest.h"

#include "parind/saturation.hpp"

#include <random>
#include <set>

using namespace parind;

namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

Polynomial x(int i, int n) { return Polynomial::variable(i, n); }
Polynomial c(const Rational& v, int n) { return Polynomial::constant(v, n); }

UniPoly from_roots(const std::vector<Rational>& roots, const Rational& lead) {
  UniPoly p = UniPoly::constant(lead);
  for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
  return p;
}

// rational roots by scanning a/b with |a|, b <= bound
std::set<Rational> scan_roots(const UniPoly& p, long bound) {
  std::set<Rational> out;
  for (long b = 1; b <= bound; ++b)
    for (long a = -bound; a <= bound; ++a)
      if (p(q(a, b)).is_zero()) out.insert(q(a, b));
  return out;
}

ConstructibleSet axes_complement() { return ConstructibleSet::nonzero_set(x(0, 2) * x(1, 2)); }

ConstructibleSet line_minus(const std::vector<Rational>& points) {
  ConstructibleSet s = ConstructibleSet::everything(1);
  for (const auto& p : points) s = s && ConstructibleSet::nonzero_set(x(0, 1) - c(p, 1));
  return s;
}

}  // namespace

TEST_CASE("univariate arithmetic") {
  const UniPoly p({q(1), q(2), q(3)});
  CHECK(p(q(2)) == q(17));
  CHECK(p.shifted(q(1))(q(0)) == p(q(1)));
  CHECK(p.shifted(q(-1, 2))(q(3)) == p(q(5, 2)));
  CHECK((p - p).is_zero());
  CHECK((p * UniPoly::variable()).degree() == 3);
  CHECK_THROWS_AS(UniPoly().rational_roots(), DomainError);
  CHECK(UniPoly::constant(q(5)).rational_roots().empty());
}

TEST_CASE("rational roots against a scan") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<Rational> roots;
    const int k = static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) roots.push_back(q(num(rng), den(rng)));
    UniPoly p = from_roots(roots, q(num(rng) == 0 ? 1 : 3, den(rng)));
    // an irreducible quadratic factor adds no rational roots
    if (trial % 3 == 0) p = p * UniPoly({q(2), q(0), q(1)});
    const auto found = p.rational_roots();
    CHECK(std::set<Rational>(found.begin(), found.end()) == scan_roots(p, 30));
    CHECK(std::set<Rational>(found.begin(), found.end()) == std::set<Rational>(roots.begin(), roots.end()));
  }
}

TEST_CASE("polynomials and constructible sets") {
  const Polynomial g = x(0, 2) * x(0, 2) - x(1, 2);
  CHECK(g({q(2), q(4)}).is_zero());
  CHECK(g.compose({UniPoly({q(1), q(1)}), UniPoly({q(1), q(2), q(1)})}).is_zero());
  const ConstructibleSet parabola = ConstructibleSet::zero_set(g) && ConstructibleSet::nonzero_set(x(0, 2) - c(q(1), 2));
  CHECK(parabola.contains({q(3), q(9)}));
  CHECK_FALSE(parabola.contains({q(1), q(1)}));
  CHECK_FALSE(parabola.contains({q(3), q(8)}));
  CHECK(parabola.atoms().size() == 2);
  CHECK((!parabola).contains({q(1), q(1)}));
  const auto fin = ConstructibleSet::finite(2, {{q(0), q(0)}, {q(1), q(2)}});
  CHECK(fin.contains({q(1), q(2)}));
  CHECK_FALSE(fin.contains({q(2), q(1)}));
  const auto prod = ConstructibleSet::product(line_minus({q(0)}), parabola);
  CHECK(prod.dimension() == 3);
  CHECK(prod.contains({q(5), q(2), q(4)}));
  CHECK_FALSE(prod.contains({q(0), q(2), q(4)}));
}

TEST_CASE("witness verification") {
  const CurveWitness id{{UniPoly::variable()}, q(0), {}};
  CHECK(verify_witness(id, line_minus({q(0)})));
  // a finite set is never hit by a nonconstant curve on a cofinite set
  const auto zero = ConstructibleSet::finite(1, {{q(0)}});
  CHECK_FALSE(verify_witness(id, zero));
  CHECK_FALSE(verify_witness(CurveWitness{{UniPoly({q(0), q(3), q(1)})}, q(2), {}}, zero));
  // generic line through the origin in the complement of the axes
  const CurveWitness line{{UniPoly({q(0), q(2)}), UniPoly({q(0), q(-3, 2)})}, q(0), {}};
  CHECK(verify_witness(line, axes_complement()));
  CHECK(line.point() == std::vector<Rational>{q(0), q(0)});
  // an axis does not work, and neither does puncturing an excluded point
  CHECK_FALSE(verify_witness(CurveWitness{{UniPoly({q(0), q(1)}), UniPoly()}, q(0), {}}, axes_complement()));
  CHECK_FALSE(verify_witness(CurveWitness{id.f, q(0), {q(0)}}, line_minus({q(0)})));
  // a line through (1,0) meets the axis x1 = 0 at t = -1: needs E = {-1}
  const CurveWitness shifted{{UniPoly({q(1), q(1)}), UniPoly({q(0), q(1)})}, q(0), {}};
  CHECK_FALSE(verify_witness(shifted, axes_complement()));
  CHECK(verify_witness(CurveWitness{shifted.f, q(0), {q(-1)}}, axes_complement()));
}

TEST_CASE("search") {
  const SearchUniverse u{2, 2};
  const auto w = sat_prime_member(line_minus({q(0), q(3)}), {q(3)}, u);
  REQUIRE(w.has_value());
  CHECK(w->point() == std::vector<Rational>{q(3)});
  CHECK(verify_witness(*w, line_minus({q(0), q(3)})));

  const auto ww = sat_prime_member(axes_complement(), {q(0), q(0)}, SearchUniverse{1, 1});
  REQUIRE(ww.has_value());
  CHECK(ww->degree() == 1);

  const ConstructibleSet parabola = ConstructibleSet::zero_set(x(0, 2) * x(0, 2) - x(1, 2)) &&
                                    ConstructibleSet::nonzero_set(x(0, 2) - c(q(1), 2));
  CHECK_FALSE(sat_prime_member(parabola, {q(1), q(1)}, SearchUniverse{1, 3}).has_value());
  const auto wp = sat_prime_member(parabola, {q(1), q(1)}, SearchUniverse{2, 2});
  REQUIRE(wp.has_value());
  CHECK(wp->degree() == 2);
  CHECK(verify_witness(*wp, parabola));
  // a point off the closure is never certified
  CHECK_FALSE(sat_prime_member(parabola, {q(1), q(2)}, SearchUniverse{2, 2}).has_value());
}

TEST_CASE("A is contained in sat'(A)") {
  const auto a = axes_complement();
  const auto w = sat_prime_member(a, {q(2), q(-7, 3)}, SearchUniverse{1, 1});
  REQUIRE(w.has_value());
  CHECK(w->degree() == 0);
}

TEST_CASE("subsets of the line") {
  const SearchUniverse u{3, 2};
  // finite sets are saturated
  const auto fin = ConstructibleSet::finite(1, {{q(0)}, {q(1)}});
  for (long t = -3; t <= 4; ++t) CHECK(sat_prime_member(fin, {q(t)}, u).has_value() == (t == 0 || t == 1));
  // a proper cofinite set is not: its complement is certified
  const auto cof = line_minus({q(0), q(1), q(-5, 2)});
  for (const auto& t : {q(0), q(1), q(-5, 2), q(7)}) CHECK(sat_prime_member(cof, {t}, u).has_value());
}

TEST_CASE("product rule") {
  const SearchUniverse u{2, 2};
  const auto a = line_minus({q(0)});
  CHECK(product_rule_check(a, a, {{{q(0)}, {q(0)}}}, u));
  // a finite factor contributes only its own points
  const auto fin = ConstructibleSet::finite(1, {{q(2)}});
  CHECK(product_rule_check(fin, a, {{{q(2)}, {q(0)}}}, u));
  CHECK_FALSE(product_rule_check(fin, a, {{{q(3)}, {q(0)}}}, u));

  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> coeff(-3, 3);
  for (int trial = 0; trial < 8; ++trial) {
    // A: complement of a random plane curve through a chosen point; B: the line minus two points
    Polynomial g = c(q(coeff(rng)), 2);
    for (int i = 0; i < 2; ++i) g = g + c(q(coeff(rng)), 2) * x(i, 2) + c(q(coeff(rng)), 2) * x(i, 2) * x(i, 2);
    g = g + x(0, 2) * x(1, 2) * x(1, 2);
    const std::vector<Rational> pa{q(coeff(rng)), q(coeff(rng))};
    const Polynomial centred = g - c(g(pa), 2);
    const auto ca = ConstructibleSet::nonzero_set(centred);
    const auto cb = line_minus({q(coeff(rng)), q(4)});
    CHECK(product_rule_check(ca, cb, {{pa, {q(4)}}}, SearchUniverse{3, 1}));
  }
}

TEST_CASE("open dense subsets are saturated to everything") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 9);
  for (int n = 1; n <= 3; ++n) {
    // fixed hypersurface: x1^2 + ... + xn^2 - x1 x_n - 1
    Polynomial g = c(q(-1), n) - x(0, n) * x(n - 1, n);
    for (int i = 0; i < n; ++i) g = g + x(i, n) * x(i, n);
    const auto y = ConstructibleSet::nonzero_set(g);
    int found = 0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<Rational> pt;
      for (int i = 0; i < n; ++i) pt.push_back(q(num(rng), den(rng)));
      const auto w = sat_prime_member(y, pt, SearchUniverse{1, 1});
      if (w && w->degree() <= 1 && verify_witness(*w, y) && w->point() == pt) ++found;
    }
    CHECK(found == 100);
  }
}

TEST_CASE("fixpoint") {
  const SearchUniverse u{2, 2};
  const auto fin = ConstructibleSet::finite(1, {{q(0)}, {q(1)}});
  const auto r0 = sat_fixpoint(fin, u, {{q(0)}, {q(1)}, {q(2)}, {q(5)}});
  CHECK(r0.certified == std::vector<std::vector<Rational>>{{q(0)}, {q(1)}});

  const auto cof = line_minus({q(0), q(1)});
  const auto r1 = sat_fixpoint(cof, u, {{q(0)}, {q(1)}, {q(2)}});
  CHECK(r1.certified.size() == 3);
  CHECK(r1.rounds == 1);
  for (std::size_t i = 0; i < r1.certified.size(); ++i) {
    CHECK(verify_witness(r1.witnesses[i], cof));
    CHECK(r1.witnesses[i].point() == r1.certified[i]);
  }

  // filling punctures of a curve never enables further witnesses in the same universe
  const ConstructibleSet punctured = ConstructibleSet::zero_set(x(0, 2) * x(0, 2) - x(1, 2)) &&
                                     ConstructibleSet::nonzero_set(x(0, 2) - c(q(1), 2)) &&
                                     ConstructibleSet::nonzero_set(x(0, 2) - c(q(-1), 2));
  const auto r2 = sat_fixpoint(punctured, u, {{q(1), q(1)}, {q(-1), q(1)}, {q(1), q(2)}, {q(3), q(9)}});
  CHECK(r2.certified.size() == 3);
  CHECK(r2.rounds == 1);
  for (const auto& w : r2.witnesses) CHECK(verify_witness(w, punctured));

  CHECK_THROWS_AS(sat_fixpoint(cof, u, {{q(0)}}, 0), ResourceError);
}

TEST_CASE("monotonicity") {
  const SearchUniverse u{1, 2};
  const auto small = line_minus({q(0), q(1), q(2)});
  const auto big = small || ConstructibleSet::finite(1, {{q(2)}});
  for (const auto& t : {q(0), q(1), q(2)}) {
    const auto w = sat_prime_member(small, {t}, u);
    REQUIRE(w.has_value());
    CHECK(verify_witness(*w, big));
  }
}

TEST_CASE("witness json") {
  const CurveWitness w{{UniPoly({q(1, 3), q(-2)}), UniPoly({q(0), q(0), q(5, 7)})}, q(2), {q(-1, 2), q(4)}};
  const CurveWitness back = witness_from_json(to_json(w));
  CHECK(back.f == w.f);
  CHECK(back.puncture == w.puncture);
  CHECK(back.excluded == w.excluded);
}
