#pragma once

#include "parind/group_geometry.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace parind {

inline constexpr std::uint64_t kFiniteFieldGuard = 1'000'000;

/// Block-diagonal unipotent with upper Jordan blocks of the given partitions.
FFMatrix jordan_representative(const std::vector<int>& blocks, const std::vector<Partition>& partitions, int q);

/// M(F_q)-conjugacy class of the Jordan representative, sorted by code.
std::vector<FFMatrix> build_class(const std::vector<int>& blocks, const std::vector<Partition>& partitions, int q,
                                  std::uint64_t guard = kFiniteFieldGuard);

/// Elements of the unipotent radical of P over F_q.
std::vector<FFMatrix> radical_elements(const BlockParabolic& p, int q, std::uint64_t guard = kFiniteFieldGuard);

struct InducedSet {
  int n = 0;
  int q = 0;
  std::vector<int> blocks;
  std::vector<Partition> partitions;
  Orientation orientation = Orientation::Upper;
  std::map<Partition, std::uint64_t> classes;
  std::uint64_t total = 0;

  /// Same union of classes (the source data may differ).
  bool same_classes(const InducedSet& other) const { return classes == other.classes && total == other.total; }
};

/// Codes of the union over g in G(F_q) of g (C U) g^{-1}, sorted.
std::vector<std::uint64_t> induced_elements(const BlockParabolic& p, const std::vector<Partition>& partitions, int q,
                                            std::uint64_t guard = kFiniteFieldGuard);

/// Histogram of Jordan types over `induced_elements`.
InducedSet induced_set(const BlockParabolic& p, const std::vector<Partition>& partitions, int q,
                       std::uint64_t guard = kFiniteFieldGuard);

/// Partitions present that dominate every partition present (at most one).
std::set<Partition> heart(const InducedSet& d);

bool check_heart_independence(const std::vector<int>& blocks, const std::vector<Partition>& partitions, int q,
                              std::uint64_t guard = kFiniteFieldGuard);

/// Closure of a sorted code set under conjugation by the elementary generators of GL_n(F_q).
bool conjugation_stable(const std::vector<std::uint64_t>& codes, int n, int q);

/// Number of unipotent elements of GL_n(F_q), by exhaustive search.
std::uint64_t count_unipotents(int n, int q, std::uint64_t guard = kFiniteFieldGuard);

/// Transpose of the sorted block composition.
Partition richardson_partition(const std::vector<int>& blocks);

/// Every tuple of per-block partitions for the given blocks.
std::vector<std::vector<Partition>> block_partition_tuples(const std::vector<int>& blocks);

nlohmann::json to_json(const InducedSet& d);

}  // namespace parind
