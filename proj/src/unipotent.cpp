#include "parind/unipotent.hpp"

#include <algorithm>
#include <unordered_set>

namespace parind {

namespace {

void check_partitions(const std::vector<int>& blocks, const std::vector<Partition>& partitions) {
  if (blocks.size() != partitions.size()) throw DomainError("unipotent: one partition per block required");
  for (std::size_t b = 0; b < blocks.size(); ++b)
    if (partitions[b].size() != blocks[b])
      throw DomainError("unipotent: partition " + partitions[b].str() + " does not match block size " +
                        std::to_string(blocks[b]));
}

std::uint64_t checked_power(std::uint64_t base, int e, std::uint64_t guard, const char* what) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    r *= base;
    if (r > guard) throw ResourceError(std::string(what) + ": more than " + std::to_string(guard) + " elements");
  }
  return r;
}

// All elements of M(F_q) = prod GL_{b}(F_q), as block-diagonal matrices.
std::vector<FFMatrix> levi_elements(const std::vector<int>& blocks, int q, std::uint64_t guard) {
  int n = 0;
  std::uint64_t order = 1;
  for (int b : blocks) {
    n += b;
    order *= gln_order(b, q);
    if (order > guard) throw ResourceError("levi_elements: |M(F_q)| exceeds the guard");
  }
  std::vector<FFMatrix> out{FFMatrix::identity(n, q)};
  int start = 0;
  for (int b : blocks) {
    const auto factor = enumerate_gln_fq(b, q, guard);
    std::vector<FFMatrix> next;
    next.reserve(out.size() * factor.size());
    for (const auto& m : out)
      for (const auto& f : factor) {
        FFMatrix x = m;
        for (int i = 0; i < b; ++i)
          for (int j = 0; j < b; ++j) x.set(start + i, start + j, f(i, j));
        next.push_back(x);
      }
    out = std::move(next);
    start += b;
  }
  return out;
}

}  // namespace

FFMatrix jordan_representative(const std::vector<int>& blocks, const std::vector<Partition>& partitions, int q) {
  check_partitions(blocks, partitions);
  int n = 0;
  for (int b : blocks) n += b;
  FFMatrix x = FFMatrix::identity(n, q);
  int pos = 0;
  for (const auto& part : partitions)
    for (int len : part.parts()) {
      for (int i = 0; i + 1 < len; ++i) x.set(pos + i, pos + i + 1, 1);
      pos += len;
    }
  return x;
}

std::vector<FFMatrix> build_class(const std::vector<int>& blocks, const std::vector<Partition>& partitions, int q,
                                  std::uint64_t guard) {
  const FFMatrix rep = jordan_representative(blocks, partitions, q);
  std::map<std::uint64_t, FFMatrix> seen;
  for (const auto& m : levi_elements(blocks, q, guard)) {
    const FFMatrix c = m * rep * m.inverse();
    seen.emplace(c.encode(), c);
  }
  std::vector<FFMatrix> out;
  for (auto& [code, c] : seen) out.push_back(c);
  return out;
}

std::vector<FFMatrix> radical_elements(const BlockParabolic& p, int q, std::uint64_t guard) {
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < p.n(); ++i)
    for (int j = 0; j < p.n(); ++j)
      if (p.in_radical(i, j)) slots.emplace_back(i, j);
  const std::uint64_t count = checked_power(static_cast<std::uint64_t>(q), static_cast<int>(slots.size()), guard,
                                            "radical_elements");
  std::vector<FFMatrix> out;
  out.reserve(count);
  for (std::uint64_t code = 0; code < count; ++code) {
    FFMatrix u = FFMatrix::identity(p.n(), q);
    std::uint64_t c = code;
    for (const auto& [i, j] : slots) {
      u.set(i, j, static_cast<int>(c % q));
      c /= q;
    }
    out.push_back(u);
  }
  return out;
}

std::vector<std::uint64_t> induced_elements(const BlockParabolic& p, const std::vector<Partition>& partitions, int q,
                                            std::uint64_t guard) {
  const auto cls = build_class(p.blocks(), partitions, q, guard);
  const auto rad = radical_elements(p, q, guard);
  if (cls.size() * rad.size() > guard) throw ResourceError("induced_elements: |C U| exceeds the guard");
  std::vector<FFMatrix> cu;
  cu.reserve(cls.size() * rad.size());
  for (const auto& c : cls)
    for (const auto& u : rad) cu.push_back(c * u);
  const auto group = enumerate_gln_fq(p.n(), q, guard);
  std::vector<FFMatrix> parabolic;
  for (const auto& m : levi_elements(p.blocks(), q, guard))
    for (const auto& u : rad) parabolic.push_back(m * u);
  std::unordered_set<std::uint64_t> out;
  // g (C U) g^{-1} only depends on g P; skip g already covered by an earlier coset
  std::unordered_set<std::uint64_t> covered;
  for (const auto& g : group) {
    if (covered.count(g.encode())) continue;
    const FFMatrix gi = g.inverse();
    for (const auto& x : cu) out.insert((g * x * gi).encode());
    for (const auto& y : parabolic) covered.insert((g * y).encode());
  }
  std::vector<std::uint64_t> sorted(out.begin(), out.end());
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

InducedSet induced_set(const BlockParabolic& p, const std::vector<Partition>& partitions, int q, std::uint64_t guard) {
  InducedSet d;
  d.n = p.n();
  d.q = q;
  d.blocks = p.blocks();
  d.partitions = partitions;
  d.orientation = p.orientation();
  for (std::uint64_t code : induced_elements(p, partitions, q, guard)) {
    ++d.classes[jordan_type(FFMatrix::decode(code, p.n(), q))];
    ++d.total;
  }
  return d;
}

std::set<Partition> heart(const InducedSet& d) {
  for (const auto& [lambda, count] : d.classes) {
    bool top = true;
    for (const auto& [mu, c] : d.classes)
      if (!lambda.dominates(mu)) top = false;
    if (top) return {lambda};
  }
  return {};
}

bool check_heart_independence(const std::vector<int>& blocks, const std::vector<Partition>& partitions, int q,
                              std::uint64_t guard) {
  const InducedSet up = induced_set(BlockParabolic(blocks, Orientation::Upper), partitions, q, guard);
  const InducedSet low = induced_set(BlockParabolic(blocks, Orientation::Lower), partitions, q, guard);
  return heart(up) == heart(low);
}

bool conjugation_stable(const std::vector<std::uint64_t>& codes, int n, int q) {
  std::vector<FFMatrix> gens;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      FFMatrix e = FFMatrix::identity(n, q);
      e.set(i, j, 1);
      gens.push_back(e);
    }
  for (int i = 0; i < n; ++i) {
    FFMatrix d = FFMatrix::identity(n, q);
    for (int a = 2; a < q; ++a) {
      d.set(i, i, a);
      gens.push_back(d);
    }
  }
  for (std::uint64_t code : codes) {
    const FFMatrix x = FFMatrix::decode(code, n, q);
    for (const auto& g : gens)
      if (!std::binary_search(codes.begin(), codes.end(), (g * x * g.inverse()).encode())) return false;
  }
  return true;
}

std::uint64_t count_unipotents(int n, int q, std::uint64_t guard) {
  std::uint64_t count = 0;
  for (const auto& g : enumerate_gln_fq(n, q, guard)) {
    const FFMatrix nil = g - FFMatrix::identity(n, q);
    FFMatrix power = FFMatrix::identity(n, q);
    for (int k = 0; k < n; ++k) power = power * nil;
    if (power.rank() == 0) ++count;
  }
  return count;
}

Partition richardson_partition(const std::vector<int>& blocks) {
  std::vector<int> sorted = blocks;
  std::sort(sorted.rbegin(), sorted.rend());
  return Partition(sorted).transpose();
}

std::vector<std::vector<Partition>> block_partition_tuples(const std::vector<int>& blocks) {
  std::vector<std::vector<Partition>> out{{}};
  for (int b : blocks) {
    std::vector<std::vector<Partition>> next;
    for (const auto& prefix : out)
      for (const auto& lambda : Partition::all(b)) {
        auto t = prefix;
        t.push_back(lambda);
        next.push_back(std::move(t));
      }
    out = std::move(next);
  }
  return out;
}

nlohmann::json to_json(const InducedSet& d) {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [lambda, count] : d.classes) classes.push_back({{"partition", lambda.str()}, {"count", count}});
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& lambda : d.partitions) parts.push_back(lambda.str());
  nlohmann::json h = nlohmann::json::array();
  for (const auto& lambda : heart(d)) h.push_back(lambda.str());
  return {{"n", d.n},           {"q", d.q},         {"blocks", d.blocks},
          {"partitions", parts}, {"orientation", to_string(d.orientation)},
          {"classes", classes},  {"total", d.total}, {"heart", h}};
}

}  // namespace parind
