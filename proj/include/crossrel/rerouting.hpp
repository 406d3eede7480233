#pragma once

#include <cstdint>
#include <vector>

#include "crossrel/graph.hpp"
#include "crossrel/numbers.hpp"
#include "crossrel/reliability.hpp"

namespace crossrel {

// Size-d / size-(d-1) state census. Only 2-way cuts can be repaired by a
// single reroute or augmentation, so cuts with three or more residual
// components are carried as a count; they stay cuts no matter what.
// Extension point: a census over sizes up to some k > d (with per-size
// weights dominating larger sizes) would sharpen the objective beyond the
// MCLC layer; the structures below are per-size and would stack.
struct PerLinkStates {
  std::vector<std::uint32_t> critical_noncuts_d;    // NC_d^st
  std::vector<std::uint32_t> critical_noncuts_dm1;  // NC_{d-1}^st
};

struct StateClassification {
  int d = 0;
  BigInt n_d;                              // all size-d cuts
  std::vector<NetworkState> cuts_two_way;  // C_d
  std::vector<std::vector<int>> cut_components;  // residual labels per cut
  std::uint64_t multi_way_cuts = 0;        // size-d cuts with >= 3 components
  std::vector<NetworkState> noncuts_d;     // NC_d
  std::vector<NetworkState> noncuts_dm1;   // NC_{d-1}
  std::vector<PerLinkStates> per_link;     // indexed by logical link
};

StateClassification classify_states(const LayeredNetwork& net,
                                    long long state_budget = 5'000'000);

// Indices into cuts_two_way that separate logical nodes s and t: the cuts a
// reroute or augmentation of (s, t) can convert into non-cuts.
std::vector<std::uint32_t> convertible_cut_indices(
    const LayeredNetwork& net, const StateClassification& classification,
    int s, int t);

// Conversion predicates: 2-way + separated + avoided for cut repair;
// critical + touched for non-cut damage. Total functions.
bool cut_to_noncut(const LayeredNetwork& net, NetworkState cut, int link,
                   const PhysicalPath& new_path);
bool noncut_to_cut(const LayeredNetwork& net, NetworkState noncut, int link,
                   const PhysicalPath& new_path);

// Reduced search graph for rerouting one logical link: links inside any
// critical (d-1)-non-cut are forbidden, every other physical link is priced
// by how many repairable cuts / fragile non-cuts it would keep or create.
struct RerouteWeighting {
  std::uint64_t forbidden_links = 0;
  std::vector<long long> weights;                   // |L_ij| per physical link
  std::vector<std::vector<std::uint32_t>> members;  // L_ij contents (ids)
  std::uint64_t remain_cuts = 0;  // |C_d^st| + multi-way cuts: N_d floor
};

RerouteWeighting reroute_weighting(const LayeredNetwork& net,
                                   const StateClassification& classification,
                                   int link);

struct ReroutePlan {
  int link = -1;
  PhysicalPath old_path;
  PhysicalPath new_path;
  bool feasible = false;  // endpoints connected in the search graph
  bool changed = false;   // new_path differs from old_path
  bool has_alternative = false;
  BigInt predicted_n_d;   // at the pre-reroute MCLC size
  CutVector result_vector;
  int mclc_after = 0;
  BigInt mclc_count_after;
};

// Weighted-shortest-path rerouting with a k-path budget: candidates are
// enumerated by additive weight, but the winner is chosen by the true
// set-union objective, with the current route always in the running.
ReroutePlan reroute_sp(const LayeredNetwork& net,
                       const StateClassification& classification, int link,
                       int k, const EnumerationLimits& limits = {});

// Exhaustive optimum over all simple replacement paths that do not lower the
// MCLC, scored by direct recomputation (independent of the weighting above).
ReroutePlan exact_reroute_oracle(const LayeredNetwork& net, int link,
                                 long long path_budget = 100'000,
                                 const EnumerationLimits& limits = {});

struct RerouteStep {
  int iteration = 0;
  int link = -1;
  PhysicalPath new_path;
  int d = 0;
  BigInt n_d;
};

struct RerouteTrace {
  LayeredNetwork network;
  int initial_d = 0;
  BigInt initial_n_d;
  std::vector<RerouteStep> steps;
};

// Applies the best single-link reroute until no strict improvement in
// (-d, N_d) remains; each round scans every logical link.
RerouteTrace iterative_reroute(const LayeredNetwork& net, int k,
                               const EnumerationLimits& limits = {});

}  // namespace crossrel
