#pragma once

#include <cstdint>

#include "crossrel/graph.hpp"
#include "crossrel/numbers.hpp"

namespace crossrel {

// Minimum cross-layer spanning tree computed from the logical side:
// enumerate logical spanning trees, union the fiber sets of their routes,
// take the smallest union. Distinct unions are counted once.
struct CrossLayerTreeStats {
  int size = 0;
  BigInt count;               // distinct minimum fiber unions
  std::uint64_t witness = 0;  // one minimum union, as a link mask
};

CrossLayerTreeStats cross_layer_spanning_trees(const LayeredNetwork& net,
                                               long long tree_budget =
                                                   5'000'000);

struct MclstDesignOptions {
  int candidate_paths = 8;          // k shortest (by hops) per logical link
  bool exact = false;               // exhaustive assignment search
  long long assignment_budget = 2'000'000;
};

// Routing that minimizes the MCLST size (ties: maximize the number of
// MCLSTs). Exact mode searches every assignment of logical links to their
// candidate paths; greedy mode routes one logical spanning tree over
// mutually overlapping short paths first and the rest by shortest path.
LayeredNetwork design_min_mclst_routing(const PhysicalTopology& physical,
                                        const LogicalTopology& logical,
                                        const MclstDesignOptions& options = {});

}  // namespace crossrel
