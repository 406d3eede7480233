#pragma once

#include <vector>

#include "crossrel/graph.hpp"
#include "crossrel/numbers.hpp"
#include "crossrel/reliability.hpp"
#include "crossrel/rerouting.hpp"

namespace crossrel {

struct AugmentPlan {
  int s = -1, t = -1;       // physical node ids of the new logical link
  bool feasible = false;    // endpoints joined by some physical path
  PhysicalPath path;
  std::size_t candidate_cuts = 0;  // 2-way MCLCs separating s and t
  std::size_t converted = 0;       // cuts the chosen path repairs
  BigInt predicted_n_d;            // at the pre-augmentation MCLC size
  CutVector result_vector;
  int mclc_after = 0;
  BigInt mclc_count_after;
};

// The 2-way size-d cuts separating s and t: exactly the cuts a new (s, t)
// logical link can convert, provided its route avoids them.
std::vector<NetworkState> augment_candidates(
    const LayeredNetwork& net, const StateClassification& classification,
    int s, int t);

// Weighted-shortest-path augmentation of one candidate pair: no forbidden
// links (adding a link never creates cuts), weights count the candidate cuts
// a physical link would leave standing; winner by true converted count.
AugmentPlan augment_sp(const LayeredNetwork& net,
                       const StateClassification& classification, int s,
                       int t, int k, const EnumerationLimits& limits = {});

// Best plan over every unordered logical node pair, parallels included.
AugmentPlan best_augmentation(const LayeredNetwork& net, int k,
                              const EnumerationLimits& limits = {});

struct AugmentStep {
  int iteration = 0;
  int s = -1, t = -1;
  PhysicalPath path;
  std::size_t converted = 0;
  int d = 0;
  BigInt n_d;
  double failure_at_p = 0.0;
};

struct AugmentTrace {
  LayeredNetwork network;
  int initial_d = 0;
  BigInt initial_n_d;
  double trace_p = 0.0;
  std::vector<AugmentStep> steps;
};

// Applies best_augmentation `additions` times; every step must leave each
// N_i no larger than before (checked), so F can only improve.
AugmentTrace iterative_augment(const LayeredNetwork& net, int additions,
                               int k, double trace_p = 0.1,
                               const EnumerationLimits& limits = {});

}  // namespace crossrel
