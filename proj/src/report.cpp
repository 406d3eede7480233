#include "crossrel/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>

namespace crossrel {
namespace {

Json big_json(const BigInt& value) { return value.str(); }

Json rational_json(const BigRat& value) {
  Json out;
  out["rational"] = to_string(value);
  out["decimal"] = to_double(value);
  return out;
}

Json path_json(const PhysicalTopology& physical, const PhysicalPath& path) {
  Json names = Json::array();
  for (int node : path.nodes()) names.push_back(physical.node_name(node));
  return names;
}

Json cut_vector_json(const CutVector& vector) {
  Json out;
  out["m"] = vector.m;
  out["complete"] = vector.complete();
  out["known_up_to"] = vector.known_up_to;
  Json counts = Json::array();
  for (int i = 0; i <= vector.known_up_to; ++i)
    counts.push_back(big_json(vector.counts[i]));
  out["counts"] = counts;
  out["mclc_d"] = vector.mclc_d ? Json(*vector.mclc_d) : Json(nullptr);
  out["mclc_count"] =
      vector.mclc_count ? big_json(*vector.mclc_count) : Json(nullptr);
  out["colex_c"] = vector.colex_c ? Json(*vector.colex_c) : Json(nullptr);
  return out;
}

const char* direction_name(Direction direction) {
  switch (direction) {
    case Direction::first_smaller: return "first_smaller";
    case Direction::second_smaller: return "second_smaller";
    default: return "equal";
  }
}

const char* class_name(DominanceClass classification) {
  switch (classification) {
    case DominanceClass::uniform_dominant: return "uniform-dominant";
    case DominanceClass::both_partial: return "both-partial";
    case DominanceClass::low_regime: return "low-regime";
    case DominanceClass::high_regime: return "high-regime";
    default: return "incomparable";
  }
}

Json comparison_json(const LexComparison& comparison, const char* index_key,
                     const char* bound_key) {
  Json out;
  out["direction"] = direction_name(comparison.direction);
  out[index_key] =
      comparison.first_diff ? Json(*comparison.first_diff) : Json(nullptr);
  out["k"] = comparison.degree ? Json(*comparison.degree) : Json(nullptr);
  if (comparison.regime_bound)
    out[bound_key] = rational_json(*comparison.regime_bound);
  else
    out[bound_key] = nullptr;
  Json bounds = Json::array();
  for (const auto& term : comparison.bounds) {
    Json row;
    row["j"] = term.j;
    row["delta"] = big_json(term.delta);
    row["residual"] =
        term.residual ? rational_json(*term.residual) : Json(nullptr);
    row["bound"] = rational_json(term.bound);
    row["promoted"] = term.promoted;
    bounds.push_back(row);
  }
  out["terms"] = bounds;
  return out;
}

Json network_json(const LayeredNetwork& net) {
  Json out;
  out["physical_nodes"] = net.physical().node_count();
  out["physical_links"] = net.physical().link_count();
  out["logical_nodes"] = net.logical().node_count();
  out["logical_links"] = net.logical().link_count();
  return out;
}

Json samples_json(const FailurePolynomial& polynomial,
                  const std::vector<double>& grid) {
  Json samples = Json::array();
  for (double p : grid) {
    Json row;
    row["p"] = p;
    row["failure"] = polynomial(p);
    row["reliability"] = polynomial.reliability(p);
    samples.push_back(row);
  }
  return samples;
}

Json header(const char* command) {
  Json out;
  out["schema_version"] = kReportSchemaVersion;
  out["command"] = command;
  return out;
}

// Sign changes of F1 - F2 on (0, 1), sharpened by bisection.
std::vector<double> crossings(const FailurePolynomial& first,
                              const FailurePolynomial& second) {
  std::vector<double> roots;
  constexpr int kIntervals = 4096;
  auto gap = [&](double p) { return first(p) - second(p); };
  double previous_p = 1.0 / kIntervals;
  double previous_gap = gap(previous_p);
  for (int i = 2; i < kIntervals; ++i) {
    const double p = static_cast<double>(i) / kIntervals;
    const double value = gap(p);
    if ((previous_gap < 0 && value > 0) || (previous_gap > 0 && value < 0)) {
      double lo = previous_p, hi = p, lo_gap = previous_gap;
      for (int step = 0; step < 100 && hi - lo > 1e-13; ++step) {
        const double mid = 0.5 * (lo + hi);
        const double mid_gap = gap(mid);
        if ((lo_gap < 0) == (mid_gap < 0)) {
          lo = mid;
          lo_gap = mid_gap;
        } else {
          hi = mid;
        }
      }
      roots.push_back(0.5 * (lo + hi));
    }
    previous_p = p;
    previous_gap = value;
  }
  return roots;
}

}  // namespace

std::vector<double> default_p_grid() {
  std::vector<double> grid;
  for (double p = 0.001; p < 0.1; p *= 2.0) grid.push_back(p);
  for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);
  return grid;
}

Json analyze_report(const LayeredNetwork& net, const std::vector<double>& grid,
                    std::optional<int> max_size,
                    const EnumerationLimits& limits) {
  Json out = header("analyze");
  out["network"] = network_json(net);
  const auto vector = cut_vector(net, max_size, limits);
  out["cut_vector"] = cut_vector_json(vector);
  if (vector.complete()) {
    const auto tree = mclst(net);
    Json mclst_json;
    mclst_json["size"] = tree.mclst_size;
    mclst_json["count"] = big_json(tree.mclst_count);
    out["mclst"] = mclst_json;
    out["samples"] = samples_json(FailurePolynomial(vector), grid);
  } else {
    out["mclst"] = nullptr;
    out["samples"] = Json::array();
  }
  return out;
}

Json compare_report(const LayeredNetwork& first, const LayeredNetwork& second,
                    const EnumerationLimits& limits) {
  Json out = header("compare");
  const auto vector_first = cut_vector(first, std::nullopt, limits);
  const auto vector_second = cut_vector(second, std::nullopt, limits);
  out["first"] = cut_vector_json(vector_first);
  out["second"] = cut_vector_json(vector_second);

  if (vector_first.m == vector_second.m) {
    const auto dominance = dominance_check(vector_first, vector_second);
    out["dominance"] = class_name(dominance.classification);
    out["favored"] = direction_name(dominance.favored);
    out["lex"] = comparison_json(dominance.lex, "d", "p0_low");
    if (dominance.lex.direction != Direction::equal) {
      const bool first_smaller =
          dominance.lex.direction == Direction::first_smaller;
      out["lex"]["p0_simple"] = rational_json(
          first_smaller ? low_regime_bound_simple(vector_first, vector_second)
                        : low_regime_bound_simple(vector_second, vector_first));
    } else {
      out["lex"]["p0_simple"] = nullptr;
    }
    out["colex"] = comparison_json(dominance.colex, "c", "p0_high");
  } else {
    // Orderings need equal link counts; the polynomials stay comparable.
    out["dominance"] = nullptr;
    out["favored"] = nullptr;
    out["lex"] = nullptr;
    out["colex"] = nullptr;
  }

  const FailurePolynomial poly_first(vector_first);
  const FailurePolynomial poly_second(vector_second);
  Json roots = Json::array();
  for (double root : crossings(poly_first, poly_second)) roots.push_back(root);
  out["crossings"] = roots;
  return out;
}

Json reroute_report(const LayeredNetwork& net, int k, bool iterate,
                    const EnumerationLimits& limits) {
  Json out = header("reroute");
  out["network"] = network_json(net);
  out["k"] = k;
  out["iterate"] = iterate;
  const auto trace = iterative_reroute(net, k, limits);
  Json initial;
  initial["d"] = trace.initial_d;
  initial["n_d"] = big_json(trace.initial_n_d);
  out["initial"] = initial;

  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    Json row;
    row["iteration"] = step.iteration;
    row["link"] = step.link;
    row["new_path"] = path_json(net.physical(), step.new_path);
    row["d"] = step.d;
    row["n_d"] = big_json(step.n_d);
    steps.push_back(row);
    if (!iterate) break;
  }
  out["steps"] = steps;

  const LayeredNetwork* final_net = &trace.network;
  LayeredNetwork single;
  if (!iterate && !trace.steps.empty()) {
    single = net.with_route(trace.steps.front().link,
                            trace.steps.front().new_path);
    final_net = &single;
  }
  out["final"] = cut_vector_json(cut_vector(*final_net, std::nullopt, limits));
  return out;
}

Json augment_report(const LayeredNetwork& net, int additions, int k,
                    double trace_p, const EnumerationLimits& limits) {
  Json out = header("augment");
  out["network"] = network_json(net);
  out["n"] = additions;
  out["k"] = k;
  out["p"] = trace_p;
  const auto trace = iterative_augment(net, additions, k, trace_p, limits);
  Json initial;
  initial["d"] = trace.initial_d;
  initial["n_d"] = big_json(trace.initial_n_d);
  out["initial"] = initial;
  Json steps = Json::array();
  for (const auto& step : trace.steps) {
    Json row;
    row["iteration"] = step.iteration;
    row["s"] = net.physical().node_name(step.s);
    row["t"] = net.physical().node_name(step.t);
    row["path"] = path_json(net.physical(), step.path);
    row["converted"] = step.converted;
    row["d"] = step.d;
    row["n_d"] = big_json(step.n_d);
    row["failure_at_p"] = step.failure_at_p;
    steps.push_back(row);
  }
  out["steps"] = steps;
  out["final"] =
      cut_vector_json(cut_vector(trace.network, std::nullopt, limits));
  return out;
}

Json design_report(const PhysicalTopology& physical,
                   const LogicalTopology& logical,
                   const MclstDesignOptions& options,
                   const EnumerationLimits& limits) {
  Json out = header("design-mclst");
  out["k"] = options.candidate_paths;
  out["exact"] = options.exact;
  const auto net = design_min_mclst_routing(physical, logical, options);
  Json routes = Json::array();
  for (int e = 0; e < net.logical().link_count(); ++e) {
    Json row;
    row["link"] = e;
    row["path"] = path_json(physical, net.route(e));
    routes.push_back(row);
  }
  out["routes"] = routes;
  const auto tree = cross_layer_spanning_trees(net);
  Json mclst_json;
  mclst_json["size"] = tree.size;
  mclst_json["count"] = big_json(tree.count);
  out["mclst"] = mclst_json;
  out["cut_vector"] = cut_vector_json(cut_vector(net, std::nullopt, limits));
  return out;
}

Json montecarlo_report(const LayeredNetwork& net, double p, long long trials,
                       std::uint64_t seed, const EnumerationLimits& limits) {
  Json out = header("montecarlo");
  out["network"] = network_json(net);
  out["p"] = p;
  out["trials"] = trials;
  out["seed"] = seed;
  const auto estimate = monte_carlo_failure(net, p, trials, seed);
  out["estimate"] = estimate.estimate;
  out["std_error"] = estimate.std_error;
  if (net.physical().link_count() <= limits.full_enumeration_max_links) {
    const auto vector = cut_vector(net, std::nullopt, limits);
    out["exact_failure"] = failure_probability(vector, p);
  } else {
    out["exact_failure"] = nullptr;
  }
  return out;
}

Json oracle_report(const LayeredNetwork& net, std::optional<int> max_size,
                   const EnumerationLimits& limits) {
  Json out = header("oracle");
  out["network"] = network_json(net);
  Json checks = Json::array();
  bool all_pass = true;
  auto add_check = [&](const char* name, bool pass, std::string detail) {
    Json row;
    row["name"] = name;
    row["pass"] = pass;
    row["detail"] = detail;
    checks.push_back(row);
    all_pass = all_pass && pass;
  };

  const int m = net.physical().link_count();
  const auto vector = cut_vector(net, max_size, limits);

  {  // Stratified per-size recount must match the state-space sweep.
    bool pass = true;
    for (int size = 0; size <= vector.known_up_to; ++size) {
      BigInt stratified = 0;
      detail::for_each_subset_of_size(m, size, [&](std::uint64_t mask) {
        if (detail::residual_component_count(net, mask) > 1) ++stratified;
      });
      if (stratified != vector.counts[size]) pass = false;
    }
    add_check("stratified-recount", pass, "per-size recount of the cut vector");
  }

  if (vector.complete()) {
    bool pass = true;
    for (int i = 0; i < m; ++i)
      if (vector.counts[i] * binomial(m, i + 1) >
          vector.counts[i + 1] * binomial(m, i))
        pass = false;
    add_check("cut-fraction-monotone", pass,
              "N_i / C(m,i) nondecreasing in i");
  }

  if (m <= 12) {
    bool pass = true;
    const std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total && pass; ++mask) {
      if (detail::residual_component_count(net, mask) <= 1) continue;
      for (int link = 0; link < m; ++link) {
        const std::uint64_t super = mask | (std::uint64_t{1} << link);
        if (detail::residual_component_count(net, super) <= 1) {
          pass = false;
          break;
        }
      }
    }
    add_check("cut-superset-monotone", pass, "supersets of cuts are cuts");
  }

  if (net.logical().node_count() >= 2) {
    const auto [d, count] = mclc(net);
    const bool pass = vector.mclc_d ? (*vector.mclc_d == d &&
                                       *vector.mclc_count == count)
                                    : vector.known_up_to < d;
    add_check("mclc-early-exit", pass,
              "stratified early-exit matches the vector");
    if (vector.complete()) {
      const auto survival = mclst(net);
      const auto trees = cross_layer_spanning_trees(net);
      const bool sizes = survival.mclst_size == m - *vector.colex_c &&
                         survival.mclst_size == trees.size;
      const bool counts = survival.mclst_count == trees.count;
      add_check("mclst-consistency", sizes && counts,
                "survival-set and spanning-tree enumerations agree with m - c");
    }
  }

  {  // Incidence is exactly recomputable from the routes.
    std::vector<std::vector<int>> rebuilt(m);
    for (int e = 0; e < net.logical().link_count(); ++e)
      for (int link : net.route(e).links()) rebuilt[link].push_back(e);
    for (auto& users : rebuilt) std::sort(users.begin(), users.end());
    add_check("incidence-roundtrip", rebuilt == net.incidence(),
              "incidence rebuilt from routes is identical");
  }

  out["checks"] = checks;
  out["all_pass"] = all_pass;
  return out;
}

}  // namespace crossrel
