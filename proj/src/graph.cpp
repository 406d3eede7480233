#include "crossrel/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace crossrel {
namespace {

std::pair<int, int> normalized(int u, int v) {
  return u < v ? std::pair{u, v} : std::pair{v, u};
}

// Union-find over at most a few dozen slots; path halving is plenty.
struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    // Root at the smaller index so labels are canonical.
    if (a < b) parent[b] = a; else parent[a] = b;
  }
};

}  // namespace

PhysicalTopology PhysicalTopology::create(
    std::vector<std::string> node_names, std::vector<std::pair<int, int>> links) {
  PhysicalTopology topo;
  topo.node_names_ = std::move(node_names);
  const int n = topo.node_count();
  if (static_cast<int>(links.size()) > 64)
    throw std::invalid_argument("physical topology exceeds 64 links");
  topo.adjacency_.resize(n);
  for (auto [u, v] : links) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("physical link endpoint out of range");
    if (u == v) throw std::invalid_argument("physical self-loop");
    auto e = normalized(u, v);
    if (std::find(topo.links_.begin(), topo.links_.end(), e) != topo.links_.end())
      throw std::invalid_argument("duplicate physical link");
    const int index = static_cast<int>(topo.links_.size());
    topo.links_.push_back(e);
    topo.adjacency_[e.first].emplace_back(e.second, index);
    topo.adjacency_[e.second].emplace_back(e.first, index);
  }
  for (auto& adj : topo.adjacency_) std::sort(adj.begin(), adj.end());
  return topo;
}

int PhysicalTopology::find_node(const std::string& name) const {
  for (int i = 0; i < node_count(); ++i)
    if (node_names_[i] == name) return i;
  return -1;
}

int PhysicalTopology::find_link(int u, int v) const {
  auto e = normalized(u, v);
  for (int i = 0; i < link_count(); ++i)
    if (links_[i] == e) return i;
  return -1;
}

LogicalTopology LogicalTopology::create(std::vector<int> nodes,
                                        std::vector<std::pair<int, int>> links,
                                        const PhysicalTopology& physical) {
  LogicalTopology topo;
  std::sort(nodes.begin(), nodes.end());
  nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
  for (int node : nodes)
    if (node < 0 || node >= physical.node_count())
      throw std::invalid_argument("logical node is not a physical node");
  topo.nodes_ = std::move(nodes);
  for (auto [s, t] : links) {
    if (s == t) throw std::invalid_argument("logical self-loop");
    if (topo.slot_of(s) < 0 || topo.slot_of(t) < 0)
      throw std::invalid_argument("logical link endpoint is not a logical node");
    topo.links_.push_back(normalized(s, t));
  }
  // Connectivity over declared links; a disconnected logical graph can never
  // be reliable and is rejected up front.
  const int n = topo.node_count();
  if (n > 1) {
    DisjointSet components(n);
    for (auto [s, t] : topo.links_)
      components.unite(topo.slot_of(s), topo.slot_of(t));
    for (int slot = 1; slot < n; ++slot)
      if (components.find(slot) != components.find(0))
        throw std::invalid_argument("logical topology is disconnected");
  }
  return topo;
}

int LogicalTopology::slot_of(int physical_node) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), physical_node);
  if (it == nodes_.end() || *it != physical_node) return -1;
  return static_cast<int>(it - nodes_.begin());
}

PhysicalPath PhysicalPath::create(const PhysicalTopology& physical,
                                  std::vector<int> nodes) {
  if (nodes.size() < 2) throw std::invalid_argument("path needs two nodes");
  // Canonical orientation for an undirected route.
  if (nodes.front() > nodes.back()) std::reverse(nodes.begin(), nodes.end());
  PhysicalPath path;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const int link = physical.find_link(nodes[i], nodes[i + 1]);
    if (link < 0)
      throw std::invalid_argument("path step is not a physical link");
    path.links_.push_back(link);
    path.link_mask_ |= std::uint64_t{1} << link;
  }
  auto sorted = nodes;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("path revisits a node");
  path.nodes_ = std::move(nodes);
  return path;
}

int NetworkState::size() const { return std::popcount(failed); }

NetworkState NetworkState::of(std::initializer_list<int> links) {
  NetworkState state;
  for (int link : links) state.failed |= std::uint64_t{1} << link;
  return state;
}

LayeredNetwork LayeredNetwork::create(PhysicalTopology physical,
                                      LogicalTopology logical,
                                      std::vector<PhysicalPath> routes) {
  if (routes.size() != static_cast<std::size_t>(logical.link_count()))
    throw std::invalid_argument("one route per logical link required");
  for (int e = 0; e < logical.link_count(); ++e) {
    auto [s, t] = logical.link(e);
    const auto& path = routes[e];
    const int lo = std::min(path.source(), path.target());
    const int hi = std::max(path.source(), path.target());
    if (std::pair{lo, hi} != std::pair{s, t})
      throw std::invalid_argument("route endpoints do not match logical link");
  }
  LayeredNetwork net;
  net.physical_ = std::move(physical);
  net.logical_ = std::move(logical);
  net.routes_ = std::move(routes);
  net.incidence_.assign(net.physical_.link_count(), {});
  for (int e = 0; e < net.logical_.link_count(); ++e)
    for (int link : net.routes_[e].links()) net.incidence_[link].push_back(e);
  for (auto& users : net.incidence_) std::sort(users.begin(), users.end());
  return net;
}

LayeredNetwork LayeredNetwork::with_route(int logical_link,
                                          PhysicalPath path) const {
  auto routes = routes_;
  routes[logical_link] = std::move(path);
  return create(physical_, logical_, std::move(routes));
}

LayeredNetwork LayeredNetwork::with_logical_link(int s, int t,
                                                 PhysicalPath path) const {
  auto links = logical_.links();
  links.emplace_back(s, t);
  auto logical = LogicalTopology::create(logical_.nodes(), std::move(links),
                                         physical_);
  auto routes = routes_;
  routes.push_back(std::move(path));
  return create(physical_, std::move(logical), std::move(routes));
}

namespace detail {

int residual_component_count(const LayeredNetwork& net, std::uint64_t failed) {
  const auto& logical = net.logical();
  DisjointSet components(logical.node_count());
  for (int e = 0; e < logical.link_count(); ++e) {
    if (net.route(e).link_mask() & failed) continue;
    auto [s, t] = logical.link(e);
    components.unite(logical.slot_of(s), logical.slot_of(t));
  }
  int count = 0;
  for (int slot = 0; slot < logical.node_count(); ++slot)
    if (components.find(slot) == slot) ++count;
  return count;
}

}  // namespace detail

ResidualGraph residual_graph(const LayeredNetwork& net, NetworkState state) {
  const auto& logical = net.logical();
  ResidualGraph residual;
  DisjointSet components(logical.node_count());
  for (int e = 0; e < logical.link_count(); ++e) {
    if (net.route(e).link_mask() & state.failed) continue;
    residual.surviving.push_back(e);
    auto [s, t] = logical.link(e);
    components.unite(logical.slot_of(s), logical.slot_of(t));
  }
  residual.component.resize(logical.node_count());
  for (int slot = 0; slot < logical.node_count(); ++slot) {
    residual.component[slot] = components.find(slot);
    if (residual.component[slot] == slot) ++residual.component_count;
  }
  return residual;
}

bool is_cross_layer_cut(const LayeredNetwork& net, NetworkState state) {
  return detail::residual_component_count(net, state.failed) > 1;
}

bool is_two_way_cut(const LayeredNetwork& net, NetworkState state) {
  return detail::residual_component_count(net, state.failed) == 2;
}

std::vector<int> critical_links(const LayeredNetwork& net, NetworkState state) {
  const auto residual = residual_graph(net, state);
  if (residual.component_count > 1)
    throw std::invalid_argument("critical_links requires a non-cut state");
  const auto& logical = net.logical();

  // Tarjan bridge search on the residual multigraph; the skipped tree edge is
  // tracked by link index so parallel logical links are never bridges.
  const int n = logical.node_count();
  std::vector<std::vector<std::pair<int, int>>> adjacency(n);
  for (int e : residual.surviving) {
    auto [s, t] = logical.link(e);
    adjacency[logical.slot_of(s)].emplace_back(logical.slot_of(t), e);
    adjacency[logical.slot_of(t)].emplace_back(logical.slot_of(s), e);
  }
  std::vector<int> discovery(n, -1), low(n, 0);
  std::vector<int> bridges;
  int clock = 0;
  auto dfs = [&](auto&& self, int node, int via_link) -> void {
    discovery[node] = low[node] = clock++;
    for (auto [next, link] : adjacency[node]) {
      if (link == via_link) continue;
      if (discovery[next] >= 0) {
        low[node] = std::min(low[node], discovery[next]);
        continue;
      }
      self(self, next, link);
      low[node] = std::min(low[node], low[next]);
      if (low[next] > discovery[node]) bridges.push_back(link);
    }
  };
  for (int slot = 0; slot < n; ++slot)
    if (discovery[slot] < 0) dfs(dfs, slot, -1);
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

bool separates(const LayeredNetwork& net, NetworkState state, int s, int t) {
  const int s_slot = net.logical().slot_of(s);
  const int t_slot = net.logical().slot_of(t);
  if (s_slot < 0 || t_slot < 0)
    throw std::invalid_argument("separates requires logical nodes");
  if (s_slot == t_slot)
    throw std::invalid_argument("separates requires distinct nodes");
  const auto residual = residual_graph(net, state);
  return residual.component[s_slot] != residual.component[t_slot];
}

}  // namespace crossrel
