#include "oracles.hpp"

#include "parind/characters.hpp"
#include "parind/config.hpp"
#include "parind/hecke.hpp"
#include "parind/orbital.hpp"
#include "parind/suites.hpp"
#include "parind/unipotent.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

using namespace parind;

namespace {

// Every comparison is exact; the only pinned numbers are sample sizes and wall-clock budgets.
constexpr double kTolerance = 0.0;
constexpr int kLeviSamples = 200;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

Rational q(long v) { return Rational(v); }

std::vector<UnramifiedCharacter> four_characters() {
  std::vector<UnramifiedCharacter> out;
  for (const auto& z : RunConfig{}.characters) out.emplace_back(z);
  return out;
}

std::vector<HeckeMeasure> level_one_basis(long p) {
  return biinvariant_basis(2, PrimeContext(p, 1), {{0, 0}, {1, 0}});
}

RationalMatrix random_levi(std::mt19937_64& rng, const BlockParabolic& p) {
  RationalMatrix m = zeros<Rational>(p.n(), p.n());
  for (std::size_t b = 0; b < p.blocks().size(); ++b) {
    const int s = p.block_start(static_cast<int>(b));
    m.block(s, s, p.blocks()[b], p.blocks()[b]) = oracle::random_matrix(rng, p.blocks()[b]);
  }
  return m;
}

Outcome parabolic_discriminant() {
  std::mt19937_64 rng(kSeed);
  std::size_t cases = 0, bad = 0;
  for (int n = 2; n <= 4; ++n)
    for (const auto& blocks : BlockParabolic::compositions(n))
      for (auto o : {Orientation::Upper, Orientation::Lower}) {
        const BlockParabolic p(blocks, o);
        for (int s = 0; s < kLeviSamples; ++s, ++cases)
          if (!parabolic_discriminant_check(p, random_levi(rng, p))) ++bad;
      }
  return {bad == 0, std::to_string(cases) + " Levi elements, " + std::to_string(bad) + " mismatches"};
}

Outcome induced_characters() {
  const PrimeContext ctx(2, 1);
  std::size_t cases = 0, bad = 0;
  for (auto o : {Orientation::Upper, Orientation::Lower}) {
    const InducedModel model(BlockParabolic::borel(2, o), ctx);
    for (const auto& h : level_one_basis(2))
      for (const auto& chi : four_characters()) {
        ++cases;
        if (!induced_character_sides(h, chi, model).holds()) ++bad;
      }
  }
  const HeckeMeasure u = unit_measure(Ambient::group(3), ctx);
  const bool gl3 = verify_induced_character(u, UnramifiedCharacter({q(3), q(-2)}), BlockParabolic({2, 1}), ctx);
  return {bad == 0 && gl3, std::to_string(cases) + " trace identities on GL2(Q2), " + std::to_string(bad) +
                               " mismatches; GL3 (2,1) unit " + (gl3 ? "ok" : "mismatch")};
}

Outcome parabolic_independence() {
  const auto grid = regular_grid(2, -2, 2);
  std::size_t cases = 0, bad = 0;
  for (const auto& h : level_one_basis(2)) {
    const HeckeMeasure up = res_normalized(h, BlockParabolic::borel(2, Orientation::Upper));
    const HeckeMeasure low = res_normalized(h, BlockParabolic::borel(2, Orientation::Lower));
    for (const auto& chi : four_characters()) {
      ++cases;
      if (character_pairing(chi, up) != character_pairing(chi, low)) ++bad;
    }
    for (const auto& g : grid) {
      ++cases;
      if (orbital_integral(up, g).value != orbital_integral(low, g).value) ++bad;
    }
  }
  return {bad == 0 && grid.size() == 25,
          std::to_string(cases) + " pairings over " + std::to_string(grid.size()) + " grid points, " +
              std::to_string(bad) + " mismatches"};
}

Outcome orbital_descent() {
  const auto grid = regular_grid(2, -2, 2);
  std::size_t cases = 0, bad = 0, mutated = 0;
  for (auto o : {Orientation::Upper, Orientation::Lower}) {
    const BlockParabolic b = BlockParabolic::borel(2, o);
    for (const auto& h : level_one_basis(2))
      for (const auto& g : grid) {
        ++cases;
        if (!descent_check(h, g, b, 1)) ++bad;
        if (!descent_check(h, g, b, 2)) ++mutated;
      }
  }
  return {bad == 0 && mutated > 0, std::to_string(cases) + " cases, " + std::to_string(bad) +
                                       " mismatches; mutated normalization fails on " + std::to_string(mutated)};
}

Outcome constant_term_oracle() {
  std::ostringstream detail;
  bool ok = true;
  for (long p : {2L, 3L}) {
    const PrimeContext ctx(p, 1);
    const BlockParabolic b = BlockParabolic::borel(2);
    const HeckeMeasure got = res_normalized(double_coset_indicator({1, 0}, ctx), b);
    HeckeMeasure expected(Ambient::levi(b), ctx);
    for (long a = 1; a < p; ++a)
      for (long c = 1; c < p; ++c)
        for (bool top : {true, false}) {
          const RationalMatrix t = diagonal({q(top ? p * a : a), q(top ? c : p * c)});
          const Rational value = oracle::brute_constant_term(p, t);
          if (value.is_zero()) continue;
          const RootPQ half = top ? RootPQ(Rational(0), Rational(mpz_class(1), mpz_class(p)), p)
                                  : RootPQ(Rational(0), Rational(1), p);
          expected.add(t, RootPQ(value) * half);
        }
    const bool same = got == expected;
    ok = ok && same && !expected.empty();
    detail << "p=" << p << (same ? " match " : " mismatch ") << "(" << expected.support().size() << " cosets) ";
  }
  return {ok, detail.str()};
}

Outcome finite_field_induction() {
  const Report r = run_unipotent(RunConfig{});
  std::size_t bad = 0;
  for (const auto& row : r.rows) bad += row.pass ? 0 : 1;
  bool q_squared = true;
  for (int qq : {2, 3, 5}) q_squared = q_squared && count_unipotents(2, qq) == static_cast<std::uint64_t>(qq * qq);
  return {bad == 0 && q_squared, std::to_string(r.rows.size()) + " rows, " + std::to_string(bad) +
                                     " failures; GL2 unipotent counts q^2 " + (q_squared ? "ok" : "wrong")};
}

Outcome saturation() {
  const Report r = run_saturate(RunConfig{});
  std::size_t bad = 0;
  std::string failing;
  for (const auto& row : r.rows)
    if (!row.pass) {
      ++bad;
      failing += " " + row.id;
    }
  return {bad == 0 && !r.rows.empty(), std::to_string(r.rows.size()) + " instances, " + std::to_string(bad) +
                                           " failures" + failing};
}

Outcome separation_probe() {
  const auto sym = ad_invariant_basis(level_one_basis(2));
  const auto grid = regular_grid(2, -2, 2);
  const Matrix<RootPQ> orb = orbital_matrix(sym, grid);
  std::vector<UnramifiedCharacter> borel, det;
  for (long a : {1, 2, 3, 5})
    for (long b : {1, 7, -2}) borel.push_back(UnramifiedCharacter({q(a), q(b)}));
  for (long a : {1, 2, 3, -5}) det.push_back(UnramifiedCharacter({q(a)}));
  const Matrix<RootPQ> cb = character_matrix(sym, borel, BlockParabolic::borel(2));
  const Matrix<RootPQ> cd = character_matrix(sym, det, BlockParabolic({2}));
  Matrix<RootPQ> chars(cb.rows(), cb.cols() + cd.cols());
  chars << cb, cd;
  const int orbital_rank = rank(orb);
  const int character_rank = rank(cb);
  const auto survivors = joint_annihilator(orb, chars).cols();
  std::ostringstream detail;
  detail << "symmetrized dimension " << sym.size() << ", orbital rank " << orbital_rank
         << ", principal-series character rank " << character_rank << ", with one-dimensional characters "
         << rank(chars) << ", joint annihilator dimension " << survivors;
  return {orbital_rank == character_rank && survivors == 0, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance suite: one pass/fail line per criterion"};
  int only = 0;
  app.add_option("--only", only, "run a single criterion")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::vector<Criterion> criteria{
      {1, "parabolic discriminant identity on random Levi elements", 5, parabolic_discriminant},
      {2, "induced character equals pairing with the constant term", 120, induced_characters},
      {3, "normalized constant term independent of the parabolic", 300, parabolic_independence},
      {4, "orbital integral descent with half-power discriminant", 300, orbital_descent},
      {5, "constant term of the Hecke operator against direct integration", 30, constant_term_oracle},
      {6, "finite-field induced unipotent classes independent of the parabolic", 600, finite_field_induction},
      {7, "curve saturation: product rule, open-dense cover, line subsets", 60, saturation},
      {8, "orbital and character pairings separate the symmetrized level-one space", 300, separation_probe},
  };

  bool all = true;
  for (const auto& c : criteria) {
    if (only && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pass = out.pass && seconds <= c.budget_seconds;
    all = all && pass;
    std::printf("[%s] %d %s: %s; tolerance %g; %.2fs of %.0fs\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                out.detail.c_str(), kTolerance, seconds, c.budget_seconds);
  }
  return all ? 0 : 1;
}
