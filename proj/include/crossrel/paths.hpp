#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crossrel/graph.hpp"

namespace crossrel {

// Minimum-weight s-t path with some links removed. Nonnegative additive
// weights; deterministic (adjacency is scanned in sorted order). Ties are
// broken toward fewer hops, then lexicographically smaller node sequence.
std::optional<PhysicalPath> shortest_path(const PhysicalTopology& physical,
                                          const std::vector<long long>& weights,
                                          std::uint64_t banned_links, int s,
                                          int t);

// Yen's algorithm: up to k loopless minimum-weight paths in nondecreasing
// (weight, hops, lexicographic) order.
std::vector<PhysicalPath> k_shortest_paths(const PhysicalTopology& physical,
                                           const std::vector<long long>& weights,
                                           std::uint64_t banned_links, int s,
                                           int t, int k);

// Every simple s-t path, in depth-first lexicographic order; throws
// BudgetError once more than `budget` paths are found.
std::vector<PhysicalPath> all_simple_paths(const PhysicalTopology& physical,
                                           int s, int t, long long budget);

}  // namespace crossrel
