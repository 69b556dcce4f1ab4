#include "doctest.h"

#include "parind/unipotent.hpp"

#include <set>

using namespace parind;

namespace {

std::vector<Partition> parts(std::initializer_list<std::vector<int>> ps) {
  std::vector<Partition> out;
  for (const auto& p : ps) out.emplace_back(p);
  return out;
}

// union over every g (no coset bookkeeping) of g C U g^{-1}, with C and U built by hand
std::set<std::uint64_t> brute_induced(const BlockParabolic& p, const std::vector<Partition>& ps, int q) {
  const int n = p.n();
  const auto group = enumerate_gln_fq(n, q);
  const FFMatrix rep = jordan_representative(p.blocks(), ps, q);
  std::set<std::uint64_t> cls;
  for (const auto& g : group) {
    bool levi = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (!p.in_levi(i, j) && g(i, j) != 0) levi = false;
    if (levi) cls.insert((g * rep * g.inverse()).encode());
  }
  std::set<std::uint64_t> out;
  for (const auto& g : group) {
    bool unip = true;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int want = i == j ? 1 : 0;
        if (!p.in_radical(i, j) && g(i, j) != want) unip = false;
      }
    if (!unip) continue;
    for (std::uint64_t c : cls) {
      const FFMatrix cu = FFMatrix::decode(c, n, q) * g;
      for (const auto& h : group) out.insert((h * cu * h.inverse()).encode());
    }
  }
  return out;
}

}  // namespace

TEST_CASE("class construction") {
  CHECK(build_class({1, 1}, parts({{1}, {1}}), 2).size() == 1);
  const auto c = build_class({2}, parts({{2}}), 2);
  CHECK(c.size() == 3);
  CHECK(std::any_of(c.begin(), c.end(), [](const FFMatrix& x) { return x(0, 1) == 1 && x(1, 0) == 0; }));
  for (int q : {2, 3, 5}) {
    std::uint64_t total = 0;
    for (const auto& lambda : Partition::all(2)) total += build_class({2}, {lambda}, q).size();
    CHECK(total == static_cast<std::uint64_t>(q * q));
  }
  CHECK_THROWS_AS(build_class({2}, parts({{1}}), 2), DomainError);
  CHECK_THROWS_AS(build_class({3}, parts({{3}}), 3, 100), ResourceError);
}

TEST_CASE("unipotent counts are q^{n(n-1)}") {
  CHECK(count_unipotents(2, 2) == 4);
  CHECK(count_unipotents(2, 3) == 9);
  CHECK(count_unipotents(2, 5) == 25);
  CHECK(count_unipotents(3, 2) == 64);
  CHECK(count_unipotents(3, 3) == 729);
}

TEST_CASE("Borel induction of the trivial class in GL_2(F_2)") {
  const InducedSet d = induced_set(BlockParabolic::borel(2), parts({{1}, {1}}), 2);
  CHECK(d.total == 4);
  CHECK(d.classes.at(Partition({1, 1})) == 1);
  CHECK(d.classes.at(Partition({2})) == 3);
  CHECK(heart(d) == std::set<Partition>{Partition({2})});
}

TEST_CASE("GL_3(F_2) Levi (2,1)") {
  for (auto o : {Orientation::Upper, Orientation::Lower}) {
    const InducedSet d = induced_set(BlockParabolic({2, 1}, o), parts({{1, 1}, {1}}), 2);
    CHECK(d.classes.count(Partition({1, 1, 1})) == 1);
    CHECK(d.classes.count(Partition({2, 1})) == 1);
    CHECK(d.classes.count(Partition({3})) == 0);
    CHECK(heart(d) == std::set<Partition>{Partition({2, 1})});
  }
}

TEST_CASE("induced sets against unrestricted conjugation") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}})
    for (const auto& blocks : BlockParabolic::compositions(n))
      for (const auto& ps : block_partition_tuples(blocks))
        for (auto o : {Orientation::Upper, Orientation::Lower}) {
          const BlockParabolic p(blocks, o);
          const auto fast = induced_elements(p, ps, q);
          const auto brute = brute_induced(p, ps, q);
          CHECK(std::vector<std::uint64_t>(brute.begin(), brute.end()) == fast);
          CHECK(conjugation_stable(fast, n, q));
        }
}

TEST_CASE("independence of the parabolic") {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {2, 5}, {3, 2}, {3, 3}})
    for (const auto& blocks : BlockParabolic::compositions(n))
      for (const auto& ps : block_partition_tuples(blocks)) {
        const InducedSet up = induced_set(BlockParabolic(blocks), ps, q);
        const InducedSet low = induced_set(BlockParabolic(blocks, Orientation::Lower), ps, q);
        CHECK(up.same_classes(low));
        CHECK(heart(up).size() == 1);
        CHECK(check_heart_independence(blocks, ps, q));
        std::vector<Partition> trivial;
        for (int b : blocks) trivial.push_back(Partition(std::vector<int>(static_cast<std::size_t>(b), 1)));
        if (ps == trivial) CHECK(heart(up) == std::set<Partition>{richardson_partition(blocks)});
      }
}

TEST_CASE("hearts of different Levis can differ") {
  const auto a = heart(induced_set(BlockParabolic({1, 2}), parts({{1}, {2}}), 2));
  const auto b = heart(induced_set(BlockParabolic({2, 1}), parts({{1, 1}, {1}}), 2));
  CHECK(a != b);
  CHECK(a == std::set<Partition>{Partition({3})});
}

TEST_CASE("heart without a maximum") {
  InducedSet d;
  d.classes[Partition({3, 1, 1, 1})] = 1;
  d.classes[Partition({2, 2, 2})] = 1;
  CHECK(heart(d).empty());
}

TEST_CASE("json rows") {
  const auto j = to_json(induced_set(BlockParabolic::borel(2), parts({{1}, {1}}), 3));
  CHECK(j["total"] == 9);
  CHECK(j["heart"][0] == "(2)");
  CHECK(j["orientation"] == "upper");
}
