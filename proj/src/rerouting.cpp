#include "crossrel/rerouting.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>
#include <string>
#include <tuple>

#include "crossrel/errors.hpp"
#include "crossrel/paths.hpp"

namespace crossrel {
namespace {

// Distinct |L(Q)| over the links of a path; member lists are sorted.
std::size_t union_size(const RerouteWeighting& weighting,
                       const PhysicalPath& path) {
  std::vector<std::uint32_t> merged;
  for (int link : path.links())
    merged.insert(merged.end(), weighting.members[link].begin(),
                  weighting.members[link].end());
  std::sort(merged.begin(), merged.end());
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  return merged.size();
}

bool path_less(const PhysicalPath& a, const PhysicalPath& b) {
  if (a.hop_count() != b.hop_count()) return a.hop_count() < b.hop_count();
  return a.nodes() < b.nodes();
}

// Exact counts for the chosen candidate. The full vector is recomputed when
// the state space allows it; otherwise only sizes up to `size_hint` are.
void finalize_plan(ReroutePlan& plan, const LayeredNetwork& modified,
                   int size_hint, const EnumerationLimits& limits) {
  const int m = modified.physical().link_count();
  if (m <= limits.full_enumeration_max_links) {
    plan.result_vector = cut_vector(modified, std::nullopt, limits);
  } else {
    plan.result_vector = cut_vector(modified, size_hint, limits);
  }
  if (plan.result_vector.mclc_d) {
    plan.mclc_after = *plan.result_vector.mclc_d;
    plan.mclc_count_after = *plan.result_vector.mclc_count;
  } else {
    auto [d, count] = mclc(modified);
    plan.mclc_after = d;
    plan.mclc_count_after = count;
  }
}

}  // namespace

StateClassification classify_states(const LayeredNetwork& net,
                                    long long state_budget) {
  StateClassification result;
  auto [d, n_d] = mclc(net);
  result.d = d;
  result.n_d = n_d;
  const int m = net.physical().link_count();
  if (binomial(m, d) + binomial(m, d - 1) > state_budget)
    throw BudgetError("state classification at size " + std::to_string(d) +
                      " exceeds the state budget");
  result.per_link.resize(net.logical().link_count());

  detail::for_each_subset_of_size(m, d, [&](std::uint64_t mask) {
    const NetworkState state{mask};
    const auto residual = residual_graph(net, state);
    if (residual.component_count == 1) {
      result.noncuts_d.push_back(state);
    } else if (residual.component_count == 2) {
      result.cuts_two_way.push_back(state);
      result.cut_components.push_back(residual.component);
    } else {
      ++result.multi_way_cuts;
    }
  });
  // Every (d-1)-set is a non-cut, by minimality of d.
  detail::for_each_subset_of_size(m, d - 1, [&](std::uint64_t mask) {
    result.noncuts_dm1.push_back(NetworkState{mask});
  });

  auto record_critical = [&](const std::vector<NetworkState>& states,
                             bool size_d) {
    for (std::uint32_t index = 0; index < states.size(); ++index) {
      for (int link : critical_links(net, states[index])) {
        auto& per_link = result.per_link[link];
        (size_d ? per_link.critical_noncuts_d : per_link.critical_noncuts_dm1)
            .push_back(index);
      }
    }
  };
  record_critical(result.noncuts_d, true);
  record_critical(result.noncuts_dm1, false);
  return result;
}

std::vector<std::uint32_t> convertible_cut_indices(
    const LayeredNetwork& net, const StateClassification& classification,
    int s, int t) {
  const int s_slot = net.logical().slot_of(s);
  const int t_slot = net.logical().slot_of(t);
  if (s_slot < 0 || t_slot < 0 || s_slot == t_slot)
    throw std::invalid_argument("needs two distinct logical nodes");
  std::vector<std::uint32_t> indices;
  for (std::uint32_t i = 0; i < classification.cuts_two_way.size(); ++i) {
    const auto& labels = classification.cut_components[i];
    if (labels[s_slot] != labels[t_slot]) indices.push_back(i);
  }
  return indices;
}

bool cut_to_noncut(const LayeredNetwork& net, NetworkState cut, int link,
                   const PhysicalPath& new_path) {
  if (!is_two_way_cut(net, cut)) return false;
  auto [s, t] = net.logical().link(link);
  if (!separates(net, cut, s, t)) return false;
  return (new_path.link_mask() & cut.failed) == 0;
}

bool noncut_to_cut(const LayeredNetwork& net, NetworkState noncut, int link,
                   const PhysicalPath& new_path) {
  if (is_cross_layer_cut(net, noncut)) return false;
  const auto critical = critical_links(net, noncut);
  if (!std::binary_search(critical.begin(), critical.end(), link))
    return false;
  return (new_path.link_mask() & noncut.failed) != 0;
}

RerouteWeighting reroute_weighting(const LayeredNetwork& net,
                                   const StateClassification& classification,
                                   int link) {
  const int m = net.physical().link_count();
  RerouteWeighting weighting;
  weighting.weights.assign(m, 0);
  weighting.members.resize(m);
  const auto& per_link = classification.per_link[link];

  for (std::uint32_t index : per_link.critical_noncuts_dm1)
    weighting.forbidden_links |= classification.noncuts_dm1[index].failed;

  auto [s, t] = net.logical().link(link);
  const auto convertible = convertible_cut_indices(net, classification, s, t);
  weighting.remain_cuts = classification.multi_way_cuts +
                          classification.cuts_two_way.size() -
                          convertible.size();
  // Unified id space: convertible cuts first, then fragile non-cuts.
  const std::uint32_t noncut_base =
      static_cast<std::uint32_t>(classification.cuts_two_way.size());
  for (std::uint32_t index : convertible) {
    const std::uint64_t mask = classification.cuts_two_way[index].failed;
    for (int physical = 0; physical < m; ++physical)
      if ((mask >> physical) & 1u) weighting.members[physical].push_back(index);
  }
  for (std::uint32_t index : per_link.critical_noncuts_d) {
    const std::uint64_t mask = classification.noncuts_d[index].failed;
    for (int physical = 0; physical < m; ++physical)
      if ((mask >> physical) & 1u)
        weighting.members[physical].push_back(noncut_base + index);
  }
  for (int physical = 0; physical < m; ++physical) {
    std::sort(weighting.members[physical].begin(),
              weighting.members[physical].end());
    weighting.weights[physical] =
        static_cast<long long>(weighting.members[physical].size());
  }
  return weighting;
}

ReroutePlan reroute_sp(const LayeredNetwork& net,
                       const StateClassification& classification, int link,
                       int k, const EnumerationLimits& limits) {
  ReroutePlan plan;
  plan.link = link;
  plan.old_path = net.route(link);
  const auto weighting = reroute_weighting(net, classification, link);
  auto [s, t] = net.logical().link(link);
  auto candidates = k_shortest_paths(net.physical(), weighting.weights,
                                     weighting.forbidden_links, s, t, k);
  // The current route never creates a (d-1)-cut, so it is always a feasible
  // candidate; keeping it in the pool makes the plan no worse than identity.
  if (std::find(candidates.begin(), candidates.end(), plan.old_path) ==
      candidates.end())
    candidates.push_back(plan.old_path);
  plan.feasible = !candidates.empty();
  if (!plan.feasible) return plan;
  plan.has_alternative = candidates.size() > 1;

  bool first = true;
  std::size_t best_score = 0;
  for (const auto& candidate : candidates) {
    const std::size_t score = union_size(weighting, candidate);
    if (first || score < best_score ||
        (score == best_score && path_less(candidate, plan.new_path))) {
      first = false;
      best_score = score;
      plan.new_path = candidate;
    }
  }
  plan.changed = !(plan.new_path == plan.old_path);
  plan.predicted_n_d = BigInt(weighting.remain_cuts + best_score);
  finalize_plan(plan, net.with_route(link, plan.new_path), classification.d,
                limits);
  if (plan.result_vector.counts[classification.d] != plan.predicted_n_d)
    throw std::logic_error("reroute prediction disagrees with recount");
  if (plan.mclc_after < classification.d)
    throw std::logic_error("reroute lowered the MCLC");
  return plan;
}

ReroutePlan exact_reroute_oracle(const LayeredNetwork& net, int link,
                                 long long path_budget,
                                 const EnumerationLimits& limits) {
  ReroutePlan plan;
  plan.link = link;
  plan.old_path = net.route(link);
  const auto [d, n_d] = mclc(net);
  auto [s, t] = net.logical().link(link);
  const auto paths = all_simple_paths(net.physical(), s, t, path_budget);
  plan.feasible = !paths.empty();
  plan.has_alternative = paths.size() > 1;

  const int m = net.physical().link_count();
  bool first = true;
  BigInt best_count;
  for (const auto& candidate : paths) {
    const auto modified = net.with_route(link, candidate);
    // Discard candidates that lower the MCLC.
    bool lowers = false;
    for (int size = 1; size < d && !lowers; ++size) {
      detail::for_each_subset_of_size(m, size, [&](std::uint64_t mask) {
        if (!lowers && detail::residual_component_count(modified, mask) > 1)
          lowers = true;
      });
    }
    if (lowers) continue;
    BigInt count = 0;
    detail::for_each_subset_of_size(m, d, [&](std::uint64_t mask) {
      if (detail::residual_component_count(modified, mask) > 1) ++count;
    });
    if (first || count < best_count ||
        (count == best_count && path_less(candidate, plan.new_path))) {
      first = false;
      best_count = count;
      plan.new_path = candidate;
    }
  }
  if (first) {
    // Only the current route survives the constraint.
    plan.new_path = plan.old_path;
    best_count = n_d;
  }
  plan.changed = !(plan.new_path == plan.old_path);
  plan.predicted_n_d = best_count;
  finalize_plan(plan, net.with_route(link, plan.new_path), d, limits);
  return plan;
}

RerouteTrace iterative_reroute(const LayeredNetwork& net, int k,
                               const EnumerationLimits& limits) {
  RerouteTrace trace;
  trace.network = net;
  auto [d, n_d] = mclc(net);
  trace.initial_d = d;
  trace.initial_n_d = n_d;

  for (int iteration = 1;; ++iteration) {
    const auto classification = classify_states(trace.network);
    const int links = trace.network.logical().link_count();
    // Per-link evaluations are independent; the reduction below is in link
    // order, so the outcome does not depend on scheduling.
    std::vector<std::future<ReroutePlan>> futures;
    futures.reserve(links);
    for (int link = 0; link < links; ++link)
      futures.push_back(std::async(std::launch::deferred | std::launch::async,
                                   [&, link] {
                                     return reroute_sp(trace.network,
                                                       classification, link, k,
                                                       limits);
                                   }));
    ReroutePlan best;
    bool have_best = false;
    // Smaller resulting N_d, then higher MCLC, then fewer hops, then lower
    // link index (scan order), then lexicographic path.
    auto rank = [](const ReroutePlan& plan) {
      return std::tuple(plan.predicted_n_d, -plan.mclc_after,
                        plan.new_path.hop_count(), plan.new_path.nodes());
    };
    for (int link = 0; link < links; ++link) {
      ReroutePlan plan = futures[link].get();
      if (!plan.feasible) continue;
      if (!have_best || rank(plan) < rank(best)) {
        best = std::move(plan);
        have_best = true;
      }
    }
    if (!have_best || best.predicted_n_d >= classification.n_d) break;
    trace.network = trace.network.with_route(best.link, best.new_path);
    trace.steps.push_back({iteration, best.link, best.new_path,
                           best.mclc_after, best.mclc_count_after});
  }
  return trace;
}

}  // namespace crossrel
