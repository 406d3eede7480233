#include "crossrel/augmentation.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "crossrel/errors.hpp"
#include "crossrel/paths.hpp"

namespace crossrel {
namespace {

void finalize_plan(AugmentPlan& plan, const LayeredNetwork& augmented,
                   int size_hint, const EnumerationLimits& limits) {
  const int m = augmented.physical().link_count();
  plan.result_vector =
      m <= limits.full_enumeration_max_links
          ? cut_vector(augmented, std::nullopt, limits)
          : cut_vector(augmented, size_hint, limits);
  if (plan.result_vector.mclc_d) {
    plan.mclc_after = *plan.result_vector.mclc_d;
    plan.mclc_count_after = *plan.result_vector.mclc_count;
  } else {
    auto [d, count] = mclc(augmented);
    plan.mclc_after = d;
    plan.mclc_count_after = count;
  }
}

}  // namespace

std::vector<NetworkState> augment_candidates(
    const LayeredNetwork& net, const StateClassification& classification,
    int s, int t) {
  std::vector<NetworkState> candidates;
  for (std::uint32_t index : convertible_cut_indices(net, classification, s, t))
    candidates.push_back(classification.cuts_two_way[index]);
  return candidates;
}

AugmentPlan augment_sp(const LayeredNetwork& net,
                       const StateClassification& classification, int s,
                       int t, int k, const EnumerationLimits& limits) {
  AugmentPlan plan;
  plan.s = s;
  plan.t = t;
  const auto convertible = convertible_cut_indices(net, classification, s, t);
  plan.candidate_cuts = convertible.size();

  const int m = net.physical().link_count();
  std::vector<long long> weights(m, 0);
  std::vector<std::vector<std::uint32_t>> members(m);
  for (std::uint32_t index : convertible) {
    const std::uint64_t mask = classification.cuts_two_way[index].failed;
    for (int physical = 0; physical < m; ++physical)
      if ((mask >> physical) & 1u) members[physical].push_back(index);
  }
  for (int physical = 0; physical < m; ++physical)
    weights[physical] = static_cast<long long>(members[physical].size());

  const auto candidates =
      k_shortest_paths(net.physical(), weights, 0, s, t, k);
  plan.feasible = !candidates.empty();
  if (!plan.feasible) return plan;

  bool first = true;
  std::size_t best_standing = 0;
  for (const auto& candidate : candidates) {
    std::vector<std::uint32_t> standing;
    for (int link : candidate.links())
      standing.insert(standing.end(), members[link].begin(),
                      members[link].end());
    std::sort(standing.begin(), standing.end());
    standing.erase(std::unique(standing.begin(), standing.end()),
                   standing.end());
    const bool better =
        first || standing.size() < best_standing ||
        (standing.size() == best_standing &&
         std::tuple(candidate.hop_count(), candidate.nodes()) <
             std::tuple(plan.path.hop_count(), plan.path.nodes()));
    if (better) {
      first = false;
      best_standing = standing.size();
      plan.path = candidate;
    }
  }
  plan.converted = plan.candidate_cuts - best_standing;
  plan.predicted_n_d = classification.n_d - BigInt(plan.converted);
  finalize_plan(plan, net.with_logical_link(s, t, plan.path),
                classification.d, limits);
  if (plan.result_vector.counts[classification.d] != plan.predicted_n_d)
    throw std::logic_error("augmentation prediction disagrees with recount");
  return plan;
}

AugmentPlan best_augmentation(const LayeredNetwork& net, int k,
                              const EnumerationLimits& limits) {
  const auto& nodes = net.logical().nodes();
  if (nodes.size() < 2)
    throw std::invalid_argument("augmentation needs two logical nodes");
  const auto classification = classify_states(net);
  AugmentPlan best;
  bool have_best = false;
  for (std::size_t a = 0; a < nodes.size(); ++a) {
    for (std::size_t b = a + 1; b < nodes.size(); ++b) {
      AugmentPlan plan =
          augment_sp(net, classification, nodes[a], nodes[b], k, limits);
      if (!plan.feasible) continue;
      // Most conversions, then fewer hops, then lexicographic pair (the
      // scan order already visits pairs lexicographically).
      const bool better =
          !have_best || plan.converted > best.converted ||
          (plan.converted == best.converted &&
           plan.path.hop_count() < best.path.hop_count());
      if (better) {
        best = std::move(plan);
        have_best = true;
      }
    }
  }
  if (!have_best) throw NoPathError("no augmentable pair is physically connected");
  return best;
}

AugmentTrace iterative_augment(const LayeredNetwork& net, int additions,
                               int k, double trace_p,
                               const EnumerationLimits& limits) {
  if (additions < 0)
    throw std::invalid_argument("augmentation count must be nonnegative");
  AugmentTrace trace;
  trace.network = net;
  trace.trace_p = trace_p;
  auto [d, n_d] = mclc(net);
  trace.initial_d = d;
  trace.initial_n_d = n_d;

  const int m = net.physical().link_count();
  std::optional<CutVector> previous;
  if (m <= limits.full_enumeration_max_links)
    previous = cut_vector(net, std::nullopt, limits);

  for (int iteration = 1; iteration <= additions; ++iteration) {
    AugmentPlan plan = best_augmentation(trace.network, k, limits);
    trace.network =
        trace.network.with_logical_link(plan.s, plan.t, plan.path);
    AugmentStep step;
    step.iteration = iteration;
    step.s = plan.s;
    step.t = plan.t;
    step.path = plan.path;
    step.converted = plan.converted;
    step.d = plan.mclc_after;
    step.n_d = plan.mclc_count_after;
    if (plan.result_vector.complete()) {
      step.failure_at_p = failure_probability(plan.result_vector, trace_p);
      if (previous) {
        // Adding a link never creates a cut, so no coefficient may grow.
        for (int i = 0; i <= m; ++i)
          if (plan.result_vector.counts[i] > previous->counts[i])
            throw std::logic_error("augmentation increased a cut count");
      }
      previous = plan.result_vector;
    }
    trace.steps.push_back(std::move(step));
  }
  return trace;
}

}  // namespace crossrel
