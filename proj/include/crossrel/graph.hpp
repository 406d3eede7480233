#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace crossrel {

// Fiber plant: undirected simple graph. Link indices are stable (link i is
// the i-th declared pair) and double as bit positions in NetworkState.
class PhysicalTopology {
 public:
  static PhysicalTopology create(std::vector<std::string> node_names,
                                 std::vector<std::pair<int, int>> links);

  int node_count() const { return static_cast<int>(node_names_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }

  const std::vector<std::string>& node_names() const { return node_names_; }
  const std::string& node_name(int node) const { return node_names_[node]; }
  const std::vector<std::pair<int, int>>& links() const { return links_; }
  std::pair<int, int> link(int index) const { return links_[index]; }

  // (neighbor, link index) pairs, sorted by neighbor then link index.
  const std::vector<std::pair<int, int>>& neighbors(int node) const {
    return adjacency_[node];
  }

  int find_node(const std::string& name) const;  // -1 if unknown
  int find_link(int u, int v) const;             // -1 if absent

 private:
  std::vector<std::string> node_names_;
  std::vector<std::pair<int, int>> links_;  // normalized u < v, unique
  std::vector<std::vector<std::pair<int, int>>> adjacency_;
};

// IP-layer graph over a subset of the physical nodes (shared identifiers).
// Parallel links are allowed and distinguished by index; the graph must be
// connected or the analysis is rejected outright.
class LogicalTopology {
 public:
  static LogicalTopology create(std::vector<int> nodes,
                                std::vector<std::pair<int, int>> links,
                                const PhysicalTopology& physical);

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int link_count() const { return static_cast<int>(links_.size()); }

  const std::vector<int>& nodes() const { return nodes_; }  // physical ids
  const std::vector<std::pair<int, int>>& links() const { return links_; }
  std::pair<int, int> link(int index) const { return links_[index]; }

  // Position of a physical node id inside nodes(), or -1.
  int slot_of(int physical_node) const;

 private:
  std::vector<int> nodes_;                  // ascending physical node ids
  std::vector<std::pair<int, int>> links_;  // physical node ids, u < v
};

// Simple path in the physical topology; link indices and the link bit mask
// are derived from the node sequence at construction.
class PhysicalPath {
 public:
  static PhysicalPath create(const PhysicalTopology& physical,
                             std::vector<int> nodes);

  const std::vector<int>& nodes() const { return nodes_; }
  const std::vector<int>& links() const { return links_; }
  std::uint64_t link_mask() const { return link_mask_; }
  int hop_count() const { return static_cast<int>(links_.size()); }

  int source() const { return nodes_.front(); }
  int target() const { return nodes_.back(); }

  bool operator==(const PhysicalPath& other) const {
    return nodes_ == other.nodes_;
  }

 private:
  std::vector<int> nodes_;
  std::vector<int> links_;
  std::uint64_t link_mask_ = 0;
};

// Set of failed physical links, one bit per link index.
struct NetworkState {
  std::uint64_t failed = 0;

  int size() const;
  bool contains(int link) const { return (failed >> link) & 1u; }

  static NetworkState of(std::initializer_list<int> links);

  bool operator==(const NetworkState&) const = default;
};

// Logical links untouched by the failed set, with canonical component
// labels (smallest logical slot in each component).
struct ResidualGraph {
  std::vector<int> surviving;  // logical link indices, ascending
  std::vector<int> component;  // per logical slot
  int component_count = 0;
};

// The layered network: fibers, IP links, and one route per IP link. The
// incidence map (physical link -> logical links over it) is rebuilt from the
// routes at construction and is bit-for-bit reproducible.
class LayeredNetwork {
 public:
  static LayeredNetwork create(PhysicalTopology physical,
                               LogicalTopology logical,
                               std::vector<PhysicalPath> routes);

  const PhysicalTopology& physical() const { return physical_; }
  const LogicalTopology& logical() const { return logical_; }
  const std::vector<PhysicalPath>& routes() const { return routes_; }
  const PhysicalPath& route(int logical_link) const {
    return routes_[logical_link];
  }

  // Logical link indices whose route uses the given physical link.
  const std::vector<std::vector<int>>& incidence() const { return incidence_; }

  LayeredNetwork with_route(int logical_link, PhysicalPath path) const;
  LayeredNetwork with_logical_link(int s, int t, PhysicalPath path) const;

 private:
  PhysicalTopology physical_;
  LogicalTopology logical_;
  std::vector<PhysicalPath> routes_;
  std::vector<std::vector<int>> incidence_;
};

ResidualGraph residual_graph(const LayeredNetwork& net, NetworkState state);

bool is_cross_layer_cut(const LayeredNetwork& net, NetworkState state);
bool is_two_way_cut(const LayeredNetwork& net, NetworkState state);

// Bridges of the residual graph of a non-cut; rejects cut states.
std::vector<int> critical_links(const LayeredNetwork& net, NetworkState state);

// Whether logical nodes s and t (physical ids) lie in different residual
// components under the given state.
bool separates(const LayeredNetwork& net, NetworkState state, int s, int t);

namespace detail {
// Component count of the residual graph without materializing it.
int residual_component_count(const LayeredNetwork& net, std::uint64_t failed);
}  // namespace detail

}  // namespace crossrel
