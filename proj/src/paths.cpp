#include "crossrel/paths.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <set>
#include <tuple>

#include "crossrel/errors.hpp"

namespace crossrel {
namespace {

struct PathKey {
  long long weight;
  std::vector<int> nodes;

  bool operator<(const PathKey& other) const {
    if (weight != other.weight) return weight < other.weight;
    if (nodes.size() != other.nodes.size())
      return nodes.size() < other.nodes.size();
    return nodes < other.nodes;
  }
};

std::optional<std::vector<int>> dijkstra(const PhysicalTopology& physical,
                                         const std::vector<long long>& weights,
                                         std::uint64_t banned_links,
                                         const std::vector<char>& banned_nodes,
                                         int s, int t) {
  constexpr long long kInf = std::numeric_limits<long long>::max();
  const int n = physical.node_count();
  std::vector<long long> dist(n, kInf);
  std::vector<int> hops(n, 0), parent(n, -1);
  using Entry = std::pair<long long, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[s] = 0;
  queue.emplace(0, s);
  while (!queue.empty()) {
    auto [cost, node] = queue.top();
    queue.pop();
    if (cost != dist[node]) continue;
    for (auto [next, link] : physical.neighbors(node)) {
      if ((banned_links >> link) & 1u) continue;
      if (banned_nodes[next]) continue;
      const long long candidate = cost + weights[link];
      // Ties resolve toward fewer hops so Dijkstra stays deterministic and
      // path-lexicographic tie breaks happen at a higher level.
      if (candidate < dist[next] ||
          (candidate == dist[next] && hops[node] + 1 < hops[next])) {
        dist[next] = candidate;
        hops[next] = hops[node] + 1;
        parent[next] = node;
        queue.emplace(candidate, next);
      }
    }
  }
  if (dist[t] == kInf) return std::nullopt;
  std::vector<int> nodes;
  for (int node = t; node != -1; node = parent[node]) nodes.push_back(node);
  std::reverse(nodes.begin(), nodes.end());
  return nodes;
}

long long path_weight(const PhysicalTopology& physical,
                      const std::vector<long long>& weights,
                      const std::vector<int>& nodes) {
  long long total = 0;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i)
    total += weights[physical.find_link(nodes[i], nodes[i + 1])];
  return total;
}

}  // namespace

std::optional<PhysicalPath> shortest_path(const PhysicalTopology& physical,
                                          const std::vector<long long>& weights,
                                          std::uint64_t banned_links, int s,
                                          int t) {
  std::vector<char> banned_nodes(physical.node_count(), 0);
  auto nodes = dijkstra(physical, weights, banned_links, banned_nodes, s, t);
  if (!nodes) return std::nullopt;
  return PhysicalPath::create(physical, std::move(*nodes));
}

std::vector<PhysicalPath> k_shortest_paths(const PhysicalTopology& physical,
                                           const std::vector<long long>& weights,
                                           std::uint64_t banned_links, int s,
                                           int t, int k) {
  std::vector<PhysicalPath> result;
  if (k <= 0) return result;
  std::vector<char> no_nodes(physical.node_count(), 0);
  auto first = dijkstra(physical, weights, banned_links, no_nodes, s, t);
  if (!first) return result;

  std::vector<std::vector<int>> accepted{*first};
  std::set<PathKey> candidates;
  while (static_cast<int>(accepted.size()) < k) {
    const auto& previous = accepted.back();
    // Deviate at every prefix of the previous path.
    for (std::size_t spur = 0; spur + 1 < previous.size(); ++spur) {
      std::vector<int> root(previous.begin(),
                            previous.begin() + spur + 1);
      std::uint64_t removed = banned_links;
      for (const auto& path : accepted) {
        if (path.size() > spur + 1 &&
            std::equal(root.begin(), root.end(), path.begin())) {
          const int link = physical.find_link(path[spur], path[spur + 1]);
          removed |= std::uint64_t{1} << link;
        }
      }
      std::vector<char> banned_nodes(physical.node_count(), 0);
      for (std::size_t i = 0; i < spur; ++i) banned_nodes[root[i]] = 1;
      auto spur_nodes = dijkstra(physical, weights, removed, banned_nodes,
                                 previous[spur], t);
      if (!spur_nodes) continue;
      root.insert(root.end(), spur_nodes->begin() + 1, spur_nodes->end());
      candidates.insert({path_weight(physical, weights, root), root});
    }
    // Drop candidates already accepted, then take the lightest.
    while (!candidates.empty() &&
           std::find(accepted.begin(), accepted.end(),
                     candidates.begin()->nodes) != accepted.end())
      candidates.erase(candidates.begin());
    if (candidates.empty()) break;
    accepted.push_back(candidates.begin()->nodes);
    candidates.erase(candidates.begin());
  }

  result.reserve(accepted.size());
  for (auto& nodes : accepted)
    result.push_back(PhysicalPath::create(physical, std::move(nodes)));
  return result;
}

std::vector<PhysicalPath> all_simple_paths(const PhysicalTopology& physical,
                                           int s, int t, long long budget) {
  std::vector<PhysicalPath> result;
  std::vector<char> visited(physical.node_count(), 0);
  std::vector<int> stack{s};
  visited[s] = 1;
  auto dfs = [&](auto&& self, int node) -> void {
    if (node == t) {
      if (static_cast<long long>(result.size()) >= budget)
        throw BudgetError("simple path enumeration exceeded budget");
      result.push_back(PhysicalPath::create(physical, stack));
      return;
    }
    for (auto [next, link] : physical.neighbors(node)) {
      if (visited[next]) continue;
      visited[next] = 1;
      stack.push_back(next);
      self(self, next);
      stack.pop_back();
      visited[next] = 0;
    }
  };
  if (s != t) dfs(dfs, s);
  return result;
}

}  // namespace crossrel
