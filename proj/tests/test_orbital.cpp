#include "doctest.h"
#include "oracles.hpp"

#include "parind/orbital.hpp"

using namespace parind;

namespace {

Rational q(long a, long b = 1) { return Rational(mpz_class(a), mpz_class(b)); }

// O_gamma(1_{K_0}) for gamma in T(Z_p) regular: one class T u(p^{-k}) K_0 for each
// 0 <= k <= d = v(a - b), of relative volume [T(Z_p) : 1 + p^k] = p^k (1 - 1/p) for k > 0;
// K_0 has mass |GL_2(Z/p^m)|, T(Z_p) has mass phi(p^m)^2; geometric factor p^{-2d}.
Rational k0_closed_form(long p, int m, long d) {
  Rational classes(1);
  for (long k = 1; k <= d; ++k) classes += pow(q(p), k - 1) * q(p - 1);
  const Rational order(static_cast<long>(oracle::gl_mod(2, p, static_cast<long>(ipow(p, m).get_si())).size()));
  const Rational phi = pow(q(p), m - 1) * q(p - 1);
  return classes * order / (phi * phi) * pow(q(p), -2 * d);
}

}  // namespace

TEST_CASE("regular elements") {
  CHECK_THROWS_AS(RegularElement({q(2), q(2)}), DomainError);
  CHECK_THROWS_AS(RegularElement({q(0), q(2)}), DomainError);
  const auto grid = regular_grid(2, -2, 2);
  CHECK(grid.size() == 25);
  for (const auto& g : grid) CHECK(g.eigenvalues()[0] != g.eigenvalues()[1]);
  CHECK(RegularElement::grid_point(3, 1, 1).valuations(3) == std::vector<long>{1, 1});
  CHECK(RegularElement::grid_point(3, 1, -2).eigenvalues()[1] == q(1, 9));
}

TEST_CASE("K_0 indicator against the closed form") {
  for (long p : {2L, 3L})
    for (int m : {1, 2}) {
      if (p == 3 && m == 2) continue;
      const PrimeContext ctx(p, m);
      const HeckeMeasure k0 = double_coset_indicator({0, 0}, ctx);
      for (long d = (p == 2 ? 1 : 0); d <= 3; ++d) {
        const RegularElement g({q(1), q(1) + pow(q(p), d) * (p == 2 ? q(1) : q(-2))});
        REQUIRE(*padic_valuation(g.eigenvalues()[0] - g.eigenvalues()[1], p) == d);
        const OrbitalValue v = orbital_integral(k0, g);
        CHECK(v.value == RootPQ(k0_closed_form(p, m, d)));
        CHECK(v.certificate.max_k == d);
      }
    }
}

TEST_CASE("units of Z_3 with distinct residues") {
  const PrimeContext ctx(3, 1);
  const RegularElement g({q(1), q(-1)});
  CHECK(orbital_integral(double_coset_indicator({0, 0}, ctx), g).value == RootPQ(12));
  // the unit is 1_{K_0} / 48
  CHECK(orbital_integral(unit_measure(Ambient::group(2), ctx), g).value == RootPQ(q(1, 4)));
  CHECK(orbital_integral(unit_measure(Ambient::group(2), ctx), RegularElement({q(1), q(4)})).value == RootPQ(q(1, 12)));
}

TEST_CASE("invariance under conjugation") {
  const PrimeContext ctx(2, 1);
  const auto basis = biinvariant_basis(2, ctx, {{0, 0}, {1, 0}});
  std::mt19937_64 rng(11);
  for (const auto& g : regular_grid(2, -1, 2)) {
    const RegularElement w({g.eigenvalues()[1], g.eigenvalues()[0]});
    for (const auto& h : basis) {
      const RootPQ v = orbital_integral(h, g).value;
      CHECK(orbital_integral(h, w).value == v);
      CHECK(orbital_integral(ad_pullback(h, oracle::random_integral(rng, 2, 2)), g).value == v);
    }
  }
}

TEST_CASE("support and determinant") {
  const PrimeContext ctx(2, 1);
  const HeckeMeasure h = double_coset_indicator({1, 0}, ctx);
  int nonzero = 0;
  for (const auto& g : regular_grid(2, -2, 2)) {
    const auto v = g.valuations(2);
    const RootPQ o = orbital_integral(h, g).value;
    if (v[0] + v[1] != 1) CHECK(o.is_zero());
    if (!o.is_zero()) ++nonzero;
  }
  CHECK(nonzero > 0);
  CHECK(orbital_integral(HeckeMeasure(Ambient::group(2), ctx), RegularElement({q(1), q(3)})).value.is_zero());
  const auto cert = orbital_integral(h, RegularElement({q(1, 2), q(4)})).certificate;
  CHECK(cert.support_min_valuation == 0);
  CHECK_FALSE(cert.reason.empty());
}

TEST_CASE("unsupported groups") {
  const PrimeContext ctx(2, 1);
  CHECK_THROWS_AS(orbital_integral(unit_measure(Ambient::group(3), ctx), RegularElement({q(1), q(2), q(4)})),
                  UnsupportedError);
  CHECK_THROWS_AS(orbital_integral(unit_measure(Ambient::group(2), ctx), RegularElement({q(1), q(2), q(4)})),
                  DomainError);
}

TEST_CASE("torus orbital integral is the value at gamma") {
  const PrimeContext ctx(2, 1);
  const BlockParabolic b = BlockParabolic::borel(2);
  HeckeMeasure t(Ambient::levi(b), ctx);
  t.add(diagonal({q(2), q(1)}), RootPQ(q(3)));
  CHECK(orbital_integral(t, RegularElement({q(2), q(3)})).value == RootPQ(q(3)));
  CHECK(orbital_integral(t, RegularElement({q(1), q(2)})).value.is_zero());
  CHECK(stable_orbital(t, RegularElement({q(2), q(3)})).value == RootPQ(q(3)));
}

TEST_CASE("descent through both Borel subgroups") {
  const PrimeContext ctx(2, 1);
  const auto basis = biinvariant_basis(2, ctx, {{0, 0}, {1, 0}});
  const auto grid = regular_grid(2, -2, 2);
  int mutation_failures = 0;
  for (auto o : {Orientation::Upper, Orientation::Lower}) {
    const BlockParabolic b = BlockParabolic::borel(2, o);
    for (const auto& h : basis)
      for (const auto& g : grid) {
        const auto r = descent_sides(h, g, b);
        CHECK(r.lhs == r.rhs);
        if (!descent_check(h, g, b, 2)) ++mutation_failures;
      }
  }
  CHECK(mutation_failures > 0);
}

TEST_CASE("descent for p = 3 on the Hecke operator") {
  const PrimeContext ctx(3, 1);
  const HeckeMeasure h = double_coset_indicator({1, 0}, ctx);
  for (const auto& g : regular_grid(3, -1, 2)) {
    CHECK(descent_check(h, g, BlockParabolic::borel(2)));
    CHECK(descent_check(h, g, BlockParabolic::borel(2, Orientation::Lower)));
  }
}

TEST_CASE("separation on the symmetrized level-one space") {
  const PrimeContext ctx(2, 1);
  const auto sym = ad_invariant_basis(biinvariant_basis(2, ctx, {{0, 0}, {1, 0}}));
  REQUIRE(sym.size() == 5);
  const auto grid = regular_grid(2, -2, 2);
  CHECK(separation_rank(sym, grid) == 2);
  std::vector<UnramifiedCharacter> borel, det;
  for (long a : {1, 2, 3, 5})
    for (long b : {1, 7, -2}) borel.push_back(UnramifiedCharacter({q(a), q(b)}));
  for (long a : {1, 2, 3, -5}) det.push_back(UnramifiedCharacter({q(a)}));
  const auto cb = character_matrix(sym, borel, BlockParabolic::borel(2));
  const auto cd = character_matrix(sym, det, BlockParabolic({2}));
  CHECK(rank(cb) == 2);
  CHECK(rank(cd) == 2);
  Matrix<RootPQ> chars(cb.rows(), cb.cols() + cd.cols());
  chars << cb, cd;
  CHECK(rank(chars) == 4);
  const Matrix<RootPQ> ann = joint_annihilator(orbital_matrix(sym, grid), chars);
  REQUIRE(ann.cols() == 1);
  // the survivor is a class function on K_0 / K_1 = GL_2(F_2); only the sign character sees it
  HeckeMeasure f(Ambient::group(2), ctx);
  for (int i = 0; i < ann.rows(); ++i) f += sym[static_cast<std::size_t>(i)].scaled(ann(i, 0));
  CHECK(f.support().size() == 6);
  RootPQ trivial(0), sign(0);
  for (const auto& [x, c] : f.support()) {
    trivial += c;
    // sign of the permutation of the three nonzero vectors of F_2^2
    const RationalMatrix r = reduce_matrix(x, ctx);
    const bool transposition = residue_mod(r.trace(), 2, 1) == 0 && !equal(r, identity<Rational>(2));
    sign += transposition ? -c : c;
  }
  CHECK(trivial.is_zero());
  CHECK_FALSE(sign.is_zero());
}
