#include "doctest.h"
#include "oracles.hpp"

#include "parind/group_geometry.hpp"

#include <functional>
#include <map>
#include <set>

using namespace parind;

namespace {

// Random element of the Levi of p with rational blocks.
RationalMatrix random_levi(std::mt19937_64& rng, const BlockParabolic& p) {
  RationalMatrix m = zeros<Rational>(p.n(), p.n());
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    const int s = p.block_start(static_cast<int>(b));
    m.block(s, s, p.blocks()[b], p.blocks()[b]) = oracle::random_matrix(rng, p.blocks()[b]);
  }
  return m;
}

RationalMatrix random_parabolic(std::mt19937_64& rng, const BlockParabolic& p) {
  RationalMatrix m = random_levi(rng, p);
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.in_radical(i, j)) m(i, j) = oracle::random_rational(rng);
  return m;
}

// Eigenvalue formula for a diagonal element: prod over root coordinates (i,j) of (a_j/a_i - 1).
Rational diagonal_delta(const std::vector<Rational>& a, const std::function<bool(int, int)>& in_h) {
  Rational d(1);
  const int n = static_cast<int>(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!in_h(i, j)) d *= a[j] / a[i] - Rational(1);
  return d;
}

}  // namespace

TEST_CASE("chevalley map") {
  CHECK(chevalley_map(identity<Rational>(2)).coefficients == std::vector<Rational>{Rational(2), Rational(1)});
  CHECK(chevalley_map(diagonal({Rational(5), Rational(1)})).coefficients == std::vector<Rational>{Rational(6), Rational(5)});
  CHECK_THROWS_AS(chevalley_map(zeros<Rational>(2, 2)), DomainError);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    const int n = 2 + i % 3;
    const RationalMatrix g = oracle::random_matrix(rng, n);
    const RationalMatrix x = oracle::random_matrix(rng, n);
    const auto c = chevalley_map(g);
    CHECK(chevalley_map(x * g * inverse(x)) == c);
    CHECK(c.coefficients.back() == oracle::cofactor_det(g));
    Rational tr(0);
    for (int k = 0; k < n; ++k) tr += g(k, k);
    CHECK(c.coefficients.front() == tr);
  }
}

TEST_CASE("discriminants on diagonal elements") {
  const auto torus = SubgroupSpec::torus(2);
  CHECK(discriminant_delta(torus, diagonal({Rational(2), Rational(1)})) == Rational(mpz_class(-1), mpz_class(2)));
  CHECK(discriminant_delta(torus, diagonal({Rational(7), Rational(7)})).is_zero());
  CHECK_THROWS_AS(discriminant_delta(torus, make_matrix({{1, 1}, {0, 1}})), DomainError);
  std::mt19937_64 rng(12);
  for (int n = 2; n <= 4; ++n) {
    for (const auto& blocks : BlockParabolic::compositions(n)) {
      const BlockParabolic p(blocks);
      for (int s = 0; s < 5; ++s) {
        std::vector<Rational> a;
        for (int i = 0; i < n; ++i) a.push_back(oracle::random_rational(rng, 9, true));
        const RationalMatrix g = diagonal(a);
        CHECK(discriminant_delta(SubgroupSpec::levi(p), g) ==
              diagonal_delta(a, [&](int i, int j) { return p.in_levi(i, j); }));
        CHECK(discriminant_delta(SubgroupSpec::parabolic(p), g) ==
              diagonal_delta(a, [&](int i, int j) { return p.in_parabolic(i, j); }));
        Rational lam(1);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (p.in_parabolic(i, j)) lam *= a[i] / a[j];
        CHECK(modulus_lambda(p, g) == lam);
      }
    }
  }
  // GL_2 Borel: a/b - 1
  const BlockParabolic b = BlockParabolic::borel(2);
  CHECK(discriminant_delta(SubgroupSpec::parabolic(b), diagonal({Rational(3), Rational(5)})) ==
        Rational(mpz_class(3), mpz_class(5)) - Rational(1));
  CHECK(modulus_lambda(b, diagonal({Rational(3), Rational(5)})) == Rational(mpz_class(3), mpz_class(5)));
}

TEST_CASE("modulus character") {
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 4; ++n)
    for (const auto& blocks : BlockParabolic::compositions(n)) {
      const BlockParabolic p(blocks);
      for (int s = 0; s < 5; ++s) {
        const RationalMatrix m = random_levi(rng, p);
        CHECK(modulus_lambda(p.opposite(), m) == Rational(1) / modulus_lambda(p, m));
        RationalMatrix u = identity<Rational>(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            if (p.in_radical(i, j)) u(i, j) = oracle::random_rational(rng);
        CHECK(modulus_lambda(p, u) == Rational(1));
        // character: lambda(xy) = lambda(x) lambda(y)
        const RationalMatrix x = random_parabolic(rng, p);
        const RationalMatrix y = random_parabolic(rng, p);
        CHECK(modulus_lambda(p, x * y) == modulus_lambda(p, x) * modulus_lambda(p, y));
      }
      if (p.blocks().size() > 1) {
        RationalMatrix w = zeros<Rational>(n, n);
        for (int i = 0; i < n; ++i) w(i, n - 1 - i) = Rational(1);
        CHECK_THROWS_AS(modulus_lambda(p, w), DomainError);
      }
    }
}

TEST_CASE("Delta transitivity through a Levi") {
  std::mt19937_64 rng(14);
  for (int n = 2; n <= 4; ++n)
    for (const auto& blocks : BlockParabolic::compositions(n)) {
      const BlockParabolic p(blocks);
      for (int s = 0; s < 5; ++s) {
        std::vector<Rational> a;
        for (int i = 0; i < n; ++i) a.push_back(oracle::random_rational(rng, 9, true));
        const RationalMatrix t = diagonal(a);
        const auto torus = SubgroupSpec::torus(n);
        const auto levi = SubgroupSpec::levi(p);
        CHECK(discriminant_delta(torus, t) ==
              relative_discriminant(levi, torus, t) * discriminant_delta(levi, t));
      }
    }
}

TEST_CASE("parabolic identity for Levi elements") {
  std::mt19937_64 rng(15);
  for (int n = 2; n <= 4; ++n)
    for (const auto& blocks : BlockParabolic::compositions(n))
      for (auto o : {Orientation::Upper, Orientation::Lower}) {
        const BlockParabolic p(blocks, o);
        for (int s = 0; s < 10; ++s) {
          const RationalMatrix m = random_levi(rng, p);
          CHECK(parabolic_discriminant_check(p, m));
          CHECK(is_regular(SubgroupSpec::levi(p), m) == is_regular(SubgroupSpec::parabolic(p), m));
        }
        const RationalMatrix central = diagonal(std::vector<Rational>(n, Rational(3)));
        CHECK(parabolic_discriminant_check(p, central));
      }
  // GL_2 Borel closed form: (a/b-1)^2 = -(b/a-1)(a/b-1)(a/b)
  const Rational a(5), b(7);
  CHECK((a / b - Rational(1)) * (a / b - Rational(1)) == -(b / a - Rational(1)) * (a / b - Rational(1)) * (a / b));
  CHECK_THROWS_AS(parabolic_discriminant_check(BlockParabolic::borel(2), make_matrix({{1, 1}, {0, 1}})), DomainError);
}

TEST_CASE("Iwasawa decomposition") {
  std::mt19937_64 rng(16);
  for (long p : {2L, 3L})
    for (int n = 2; n <= 4; ++n)
      for (const auto& blocks : BlockParabolic::compositions(n))
        for (auto o : {Orientation::Upper, Orientation::Lower}) {
          const BlockParabolic par(blocks, o);
          for (int s = 0; s < 4; ++s) {
            const RationalMatrix g = oracle::random_matrix(rng, n);
            const auto [q, k] = iwasawa_decompose(g, par, p);
            CHECK(equal(RationalMatrix(q * k), g));
            CHECK(par.contains(q));
            CHECK(gln_zp_membership(k, p));
          }
        }
  const auto lower = make_matrix({{1, 0}, {Rational(mpz_class(1), mpz_class(2)), 1}});
  const auto [q, k] = iwasawa_decompose(lower, BlockParabolic::borel(2), 2);
  CHECK(equal(RationalMatrix(q * k), lower));
  CHECK(BlockParabolic::borel(2).contains(q));
  CHECK(gln_zp_membership(k, 2));
  const auto d = iwasawa_decompose(diagonal({Rational(2), Rational(1)}), BlockParabolic::borel(2), 2);
  CHECK(equal(d.q, diagonal({Rational(2), Rational(1)})));
  CHECK(equal(d.k, identity<Rational>(2)));
}

TEST_CASE("Hermite form is a K_0-coset invariant") {
  std::mt19937_64 rng(17);
  for (int s = 0; s < 40; ++s) {
    const int n = 2 + s % 3;
    const RationalMatrix g = oracle::random_matrix(rng, n);
    const RationalMatrix k = oracle::random_integral(rng, n, 3);
    const RationalMatrix h = hermite_form(g, 3);
    CHECK(equal(hermite_form(RationalMatrix(g * k), 3), h));
    CHECK(equal(hermite_form(h, 3), h));
    CHECK(gln_zp_membership(RationalMatrix(inverse(h) * g), 3));
    const RationalMatrix l = lower_hermite_form(g, 3);
    CHECK(equal(lower_hermite_form(RationalMatrix(g * k), 3), l));
    CHECK(BlockParabolic::borel(n, Orientation::Lower).contains(l));
  }
}

TEST_CASE("partitions") {
  CHECK(Partition({2, 1}).transpose() == Partition({2, 1}));
  CHECK(Partition({3}).transpose() == Partition({1, 1, 1}));
  CHECK(Partition({3, 1}).dominates(Partition({2, 2})));
  CHECK_FALSE(Partition({2, 2}).dominates(Partition({3, 1})));
  CHECK(Partition::all(4).size() == 5);
  CHECK(Partition::all(6).size() == 11);
  CHECK(Partition::parse("(3,1,1)") == Partition({3, 1, 1}));
  CHECK(Partition({4, 2, 1}).str() == "(4,2,1)");
}

TEST_CASE("Jordan type") {
  CHECK(jordan_type(FFMatrix::identity(3, 2)) == Partition({1, 1, 1}));
  FFMatrix j(3, 2);
  for (int i = 0; i < 3; ++i) j.set(i, i, 1);
  j.set(0, 1, 1);
  j.set(1, 2, 1);
  CHECK(jordan_type(j) == Partition({3}));
  FFMatrix bad = FFMatrix::identity(2, 3);
  bad.set(0, 0, 2);
  CHECK_THROWS_AS(jordan_type(bad), DomainError);

  // Conjugacy orbits of unipotents in GL_3(F_2): each orbit has constant Jordan
  // type, and distinct orbits have distinct types.
  const auto group = enumerate_gln_fq(3, 2);
  std::set<std::uint64_t> visited;
  std::map<Partition, int> orbits_per_type;
  for (const auto& u : group) {
    FFMatrix nil = u - FFMatrix::identity(3, 2);
    if (!(nil * nil * nil == FFMatrix(3, 2))) continue;
    if (visited.count(u.encode())) continue;
    std::set<Partition> types;
    for (const auto& g : group) {
      const FFMatrix c = g * u * g.inverse();
      visited.insert(c.encode());
      types.insert(jordan_type(c));
    }
    CHECK(types.size() == 1);
    ++orbits_per_type[*types.begin()];
  }
  CHECK(orbits_per_type.size() == 3);
  for (const auto& [t, count] : orbits_per_type) CHECK(count == 1);
}
