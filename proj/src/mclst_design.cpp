#include "crossrel/mclst_design.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

#include "crossrel/errors.hpp"
#include "crossrel/paths.hpp"
#include "crossrel/reliability.hpp"

namespace crossrel {
namespace {

// Spanning trees of the logical multigraph as link-index sets, enumerated in
// ascending combination order. Parallel links give distinct trees but they
// may induce the same fiber union.
std::vector<std::vector<int>> logical_spanning_trees(
    const LogicalTopology& logical, long long budget) {
  const int n = logical.node_count();
  const int links = logical.link_count();
  std::vector<std::vector<int>> trees;
  if (n <= 1) {
    trees.push_back({});
    return trees;
  }
  if (links > 62 || binomial(links, n - 1) > budget)
    throw BudgetError("logical spanning tree enumeration exceeds budget");
  detail::for_each_subset_of_size(links, n - 1, [&](std::uint64_t mask) {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<int> selected;
    for (int e = 0; e < links; ++e) {
      if (!((mask >> e) & 1u)) continue;
      auto [s, t] = logical.link(e);
      const int a = find(logical.slot_of(s));
      const int b = find(logical.slot_of(t));
      if (a == b) return;  // cycle
      parent[a] = b;
      selected.push_back(e);
    }
    trees.push_back(std::move(selected));
  });
  return trees;
}

struct UnionStats {
  int size = 0;
  BigInt count;
  std::uint64_t witness = 0;
};

UnionStats minimum_union(const std::vector<std::vector<int>>& trees,
                         const std::vector<std::uint64_t>& route_masks) {
  int best = -1;
  std::set<std::uint64_t> minima;
  for (const auto& tree : trees) {
    std::uint64_t fibers = 0;
    for (int link : tree) fibers |= route_masks[link];
    const int size = std::popcount(fibers);
    if (best < 0 || size < best) {
      best = size;
      minima.clear();
    }
    if (size == best) minima.insert(fibers);
  }
  UnionStats stats;
  stats.size = best;
  stats.count = BigInt(minima.size());
  stats.witness = minima.empty() ? 0 : *minima.begin();
  return stats;
}

}  // namespace

CrossLayerTreeStats cross_layer_spanning_trees(const LayeredNetwork& net,
                                               long long tree_budget) {
  const auto trees = logical_spanning_trees(net.logical(), tree_budget);
  std::vector<std::uint64_t> masks;
  masks.reserve(net.routes().size());
  for (const auto& route : net.routes()) masks.push_back(route.link_mask());
  const auto stats = minimum_union(trees, masks);
  return {stats.size, stats.count, stats.witness};
}

LayeredNetwork design_min_mclst_routing(const PhysicalTopology& physical,
                                        const LogicalTopology& logical,
                                        const MclstDesignOptions& options) {
  const int links = logical.link_count();
  const std::vector<long long> unit(physical.link_count(), 1);
  std::vector<std::vector<PhysicalPath>> candidates(links);
  for (int e = 0; e < links; ++e) {
    auto [s, t] = logical.link(e);
    candidates[e] = k_shortest_paths(physical, unit, 0, s, t,
                                     options.candidate_paths);
    if (candidates[e].empty())
      throw NoPathError("logical link endpoints are physically disconnected");
  }

  if (options.exact) {
    long long total = 1;
    for (const auto& paths : candidates) {
      total *= static_cast<long long>(paths.size());
      if (total > options.assignment_budget)
        throw BudgetError("assignment space exceeds the exact-search budget");
    }
    const auto trees = logical_spanning_trees(logical, options.assignment_budget);
    std::vector<int> choice(links, 0), best_choice;
    UnionStats best;
    bool have_best = false;
    std::vector<std::uint64_t> masks(links);
    while (true) {
      for (int e = 0; e < links; ++e)
        masks[e] = candidates[e][choice[e]].link_mask();
      const auto stats = minimum_union(trees, masks);
      // Minimize the MCLST size; among equals prefer more MCLSTs; the
      // odometer order makes the first winner lexicographically least.
      if (!have_best || stats.size < best.size ||
          (stats.size == best.size && stats.count > best.count)) {
        best = stats;
        best_choice = choice;
        have_best = true;
      }
      int position = links - 1;
      while (position >= 0 &&
             choice[position] + 1 ==
                 static_cast<int>(candidates[position].size())) {
        choice[position] = 0;
        --position;
      }
      if (position < 0) break;
      ++choice[position];
    }
    std::vector<PhysicalPath> routes;
    routes.reserve(links);
    for (int e = 0; e < links; ++e)
      routes.push_back(candidates[e][best_choice[e]]);
    return LayeredNetwork::create(physical, logical, std::move(routes));
  }

  // Greedy: lay one logical spanning tree over overlapping short paths,
  // then route the remaining links by plain shortest path.
  std::vector<int> tree_links;
  {
    const int n = logical.node_count();
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int e = 0; e < links && static_cast<int>(tree_links.size()) + 1 < n;
         ++e) {
      auto [s, t] = logical.link(e);
      const int a = find(logical.slot_of(s));
      const int b = find(logical.slot_of(t));
      if (a == b) continue;
      parent[a] = b;
      tree_links.push_back(e);
    }
  }
  std::vector<PhysicalPath> routes(links, PhysicalPath{});
  std::vector<char> routed(links, 0);
  std::uint64_t fibers = 0;
  for (int e : tree_links) {
    const PhysicalPath* pick = nullptr;
    int pick_growth = 0;
    for (const auto& path : candidates[e]) {
      const int growth = std::popcount(fibers | path.link_mask());
      if (!pick || growth < pick_growth) {
        pick = &path;
        pick_growth = growth;
      }
    }
    routes[e] = *pick;
    routed[e] = 1;
    fibers |= pick->link_mask();
  }
  for (int e = 0; e < links; ++e)
    if (!routed[e]) routes[e] = candidates[e].front();
  return LayeredNetwork::create(physical, logical, std::move(routes));
}

}  // namespace crossrel
