// Acceptance suite: one criterion per entry, one PASS/FAIL line each.
// Exit status is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "crossrel/augmentation.hpp"
#include "crossrel/mclst_design.hpp"
#include "crossrel/ordering.hpp"
#include "crossrel/paths.hpp"
#include "crossrel/reliability.hpp"
#include "crossrel/rerouting.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace crossrel;
using namespace crossrel::testing;

namespace {

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> run;
};

bool require(bool condition, std::string& detail, const std::string& message) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// 1 - sum_h a_h (1-p)^h as standard-basis coefficients.
std::vector<BigInt> reliability_expansion(
    int m, std::initializer_list<std::pair<long long, int>> terms) {
  std::vector<BigInt> coefficients(m + 1, BigInt{0});
  coefficients[0] = 1;
  for (auto [a, h] : terms)
    for (int j = 0; j <= h; ++j) {
      BigInt term = BigInt(a) * binomial(h, j);
      if (j % 2 == 0) term = -term;
      coefficients[j] += term;
    }
  return coefficients;
}

bool criterion_closed_form_polynomials(std::string& detail) {
  const auto started = std::chrono::steady_clock::now();
  const auto disjoint = FailurePolynomial(cut_vector(tri_disjoint()));
  const auto shared = FailurePolynomial(cut_vector(tri_shared()));
  bool ok = true;
  ok &= require(disjoint.coefficients() ==
                    reliability_expansion(6, {{3, 4}, {-2, 6}}),
                detail, "disjoint ring is not 3(1-p)^4 - 2(1-p)^6");
  ok &= require(shared.coefficients() == reliability_expansion(3, {{1, 3}}),
                detail, "shared triangle is not (1-p)^3");
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  ok &= require(seconds < 1.0, detail, "analysis exceeded one second");
  return ok;
}

bool criterion_crossover(std::string& detail) {
  const FailurePolynomial disjoint(cut_vector(tri_disjoint()));
  const FailurePolynomial shared(cut_vector(tri_shared()));
  auto gap = [&](double p) { return disjoint(p) - shared(p); };
  int sign_changes = 0;
  double bracket_lo = 0, bracket_hi = 0;
  double previous_p = 1e-4, previous = gap(previous_p);
  for (int i = 2; i < 10'000; ++i) {
    const double p = i / 10'000.0;
    const double value = gap(p);
    if ((previous < 0 && value > 0) || (previous > 0 && value < 0)) {
      ++sign_changes;
      bracket_lo = previous_p;
      bracket_hi = p;
    }
    previous_p = p;
    previous = value;
  }
  bool ok = require(sign_changes == 1, detail,
                    "expected exactly one crossing, saw " +
                        std::to_string(sign_changes));
  if (!ok) return false;
  double lo = bracket_lo, hi = bracket_hi, lo_gap = gap(lo);
  for (int i = 0; i < 200 && hi - lo > 1e-14; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double mid_gap = gap(mid);
    if ((lo_gap < 0) == (mid_gap < 0)) {
      lo = mid;
      lo_gap = mid_gap;
    } else {
      hi = mid;
    }
  }
  const double root = 0.5 * (lo + hi);
  const double expected = (3.0 - std::sqrt(3.0)) / 2.0;
  return require(std::abs(root - expected) <= 1e-9, detail,
                 "root " + std::to_string(root) + " is not (3-sqrt(3))/2");
}

struct RandomPair {
  CutVector first, second;  // oriented: first lexicographically smaller
};

std::vector<RandomPair> random_pairs(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomPair> pairs;
  while (static_cast<int>(pairs.size()) < count) {
    const auto base = random_network(rng);
    const auto other = random_rerouted(base, rng);
    auto first = cut_vector(base);
    auto second = cut_vector(other);
    const auto lex = lex_compare(first, second);
    if (lex.direction == Direction::equal) continue;
    if (lex.direction == Direction::second_smaller) std::swap(first, second);
    pairs.push_back({std::move(first), std::move(second)});
  }
  return pairs;
}

bool criterion_lex_bound_soundness(std::string& detail) {
  const auto started = std::chrono::steady_clock::now();
  std::mt19937_64 rng(101);
  const auto pairs = random_pairs(200, 11);
  for (const auto& pair : pairs) {
    const double p0 = to_double(low_regime_bound_simple(pair.first, pair.second));
    if (!oracle_dominates_on(FailurePolynomial(pair.first),
                             FailurePolynomial(pair.second), 0.0, p0, 1000,
                             rng))
      return require(false, detail, "dominance violated below p0 (simple)");
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
          .count();
  return require(seconds < 60.0, detail, "suite exceeded 60 seconds");
}

bool criterion_regime_bound_soundness(std::string& detail) {
  std::mt19937_64 rng(202);
  const auto pairs = random_pairs(200, 13);
  int partial_forward = 0, partial_backward = 0;
  for (const auto& pair : pairs) {
    const FailurePolynomial poly_first(pair.first);
    const FailurePolynomial poly_second(pair.second);

    const auto low = low_regime_bound(pair.first, pair.second);
    if (!oracle_dominates_on(poly_first, poly_second, 0.0,
                             to_double(*low.regime_bound), 1000, rng))
      return require(false, detail, "dominance violated below p0_l");

    auto colex = colex_compare(pair.first, pair.second);
    const bool first_colex = colex.direction == Direction::first_smaller;
    const auto& small = first_colex ? pair.first : pair.second;
    const auto& large = first_colex ? pair.second : pair.first;
    const auto high = high_regime_bound(small, large);
    if (!oracle_dominates_on(FailurePolynomial(small),
                             FailurePolynomial(large),
                             to_double(*high.regime_bound), 1.0, 1000, rng))
      return require(false, detail, "dominance violated above p0_h");

    // Corollaries: partial-sum dominance certifies a whole half range.
    const auto sums_first = partial_sums(pair.first);
    const auto sums_second = partial_sums(pair.second);
    bool forward = true, backward = true;
    for (int i = 0; i <= pair.first.m; ++i) {
      if (sums_first.forward[i] > sums_second.forward[i]) forward = false;
      if (sums_first.backward[i] > sums_second.backward[i]) backward = false;
    }
    if (forward) {
      ++partial_forward;
      if (!oracle_dominates_on(poly_first, poly_second, 0.0, 0.5, 1000, rng))
        return require(false, detail, "forward partial-sum corollary violated");
    }
    if (backward) {
      ++partial_backward;
      if (!oracle_dominates_on(poly_first, poly_second, 0.5, 1.0, 1000, rng))
        return require(false, detail, "backward partial-sum corollary violated");
    }
  }
  detail = std::to_string(partial_forward) + " forward / " +
           std::to_string(partial_backward) + " backward partial-sum pairs";
  return true;
}

bool criterion_conversion_predicates(std::string& detail) {
  std::mt19937_64 rng(303);
  std::vector<LayeredNetwork> nets{tri_shared(), tri_disjoint(), square_k4(),
                                   hub_k4()};
  for (int i = 0; i < 3; ++i) nets.push_back(random_network(rng));
  long long checked = 0;
  for (const auto& net : nets) {
    const int m = net.physical().link_count();
    const int d = mclc(net).first;
    for (int link = 0; link < net.logical().link_count(); ++link) {
      auto [s, t] = net.logical().link(link);
      for (const auto& path : all_simple_paths(net.physical(), s, t, 10'000)) {
        const auto modified = net.with_route(link, path);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
          const NetworkState state{mask};
          const bool before = is_cross_layer_cut(net, state);
          const bool after = is_cross_layer_cut(modified, state);
          ++checked;
          if (before && cut_to_noncut(net, state, link, path) == after)
            return require(false, detail, "cut conversion prediction wrong");
          if (!before && noncut_to_cut(net, state, link, path) != after)
            return require(false, detail, "non-cut conversion prediction wrong");
          if (!before && after && state.size() < d - 1)
            return require(false, detail, "a (<d-1)-non-cut was converted");
        }
      }
    }
  }
  detail = std::to_string(checked) + " (state, reroute) pairs";
  return true;
}

bool criterion_d_approximation(std::string& detail) {
  std::mt19937_64 rng(404);
  int instances_closed = 0;
  const int instances = 100;
  for (int round = 0; round < instances; ++round) {
    const auto net = random_network(rng);
    const auto classification = classify_states(net);
    bool closed = true;
    for (int link = 0; link < net.logical().link_count(); ++link) {
      const auto exact = exact_reroute_oracle(net, link);
      const auto one = reroute_sp(net, classification, link, 1);
      if (one.predicted_n_d >
          BigInt(classification.d) * exact.predicted_n_d)
        return require(false, detail, "d-approximation bound violated");
      const auto wide = reroute_sp(net, classification, link, 100);
      if (wide.predicted_n_d != exact.predicted_n_d) closed = false;
    }
    if (closed) ++instances_closed;
  }
  detail = "k=100 matched the oracle on " + std::to_string(instances_closed) +
           "/" + std::to_string(instances) + " instances";
  return require(instances_closed * 10 >= instances * 9, detail,
                 "k=100 closed the gap on fewer than 90% of instances: " +
                     detail);
}

bool criterion_iterative_rerouting(std::string& detail) {
  // Exact local-optimum trajectory on the shared triangle.
  const auto trace = iterative_reroute(tri_shared(), 10);
  bool ok = require(cut_vector(tri_shared()).counts ==
                        std::vector<BigInt>{0, 3, 3, 1},
                    detail, "unexpected initial vector");
  ok &= require(trace.steps.size() == 1, detail,
                "expected exactly one improving step");
  ok &= require(cut_vector(trace.network).counts ==
                    std::vector<BigInt>{0, 1, 3, 1},
                detail, "local optimum is not [0,1,3,1]");
  if (!ok) return false;

  std::mt19937_64 rng(505);
  for (int round = 0; round < 30; ++round) {
    const auto net = random_network(rng);
    const auto random_trace = iterative_reroute(net, 10);
    int d = random_trace.initial_d;
    BigInt n_d = random_trace.initial_n_d;
    for (const auto& step : random_trace.steps) {
      if (!(step.d > d || (step.d == d && step.n_d < n_d)))
        return require(false, detail, "(-d, N_d) did not strictly improve");
      d = step.d;
      n_d = step.n_d;
    }
  }
  return true;
}

bool criterion_augmentation(std::string& detail) {
  std::mt19937_64 rng(606);
  std::vector<LayeredNetwork> nets{tri_shared(), square_k4()};
  for (int i = 0; i < 3; ++i) nets.push_back(random_network(rng));
  for (const auto& net : nets) {
    const auto before = cut_vector(net);
    const auto& nodes = net.logical().nodes();
    for (std::size_t a = 0; a < nodes.size(); ++a)
      for (std::size_t b = a + 1; b < nodes.size(); ++b)
        for (const auto& path :
             all_simple_paths(net.physical(), nodes[a], nodes[b], 10'000)) {
          const auto after =
              cut_vector(net.with_logical_link(nodes[a], nodes[b], path));
          for (int i = 0; i <= before.m; ++i)
            if (after.counts[i] > before.counts[i])
              return require(false, detail, "augmentation increased a count");
        }
  }
  const auto trace = iterative_augment(square_k4(), 2, 10, 0.01);
  bool ok = require(trace.initial_d == 2, detail, "square should start at d=2");
  ok &= require(!trace.steps.empty() && trace.steps.back().d == 3, detail,
                "iterative augmentation did not raise the MCLC to 3");
  return ok;
}

bool criterion_mclst(std::string& detail) {
  std::mt19937_64 rng(707);
  std::vector<LayeredNetwork> nets{tri_shared(), tri_direct(), tri_disjoint(),
                                   tri_shared_padded(), square_k4(), hub_k4(),
                                   single_lightpath(4)};
  for (int i = 0; i < 20; ++i) nets.push_back(random_network(rng));
  for (const auto& net : nets) {
    const auto vector = cut_vector(net);
    const auto survival = mclst(net);
    if (survival.mclst_size != vector.m - *vector.colex_c)
      return require(false, detail, "mclst_size != m - colex_c");
    const auto trees = cross_layer_spanning_trees(net);
    if (trees.size != survival.mclst_size || trees.count != survival.mclst_count)
      return require(false, detail, "tree and survival enumerations disagree");
  }

  // Exact design equals exhaustive search over its candidate space.
  for (int round = 0; round < 5; ++round) {
    const auto sample = random_network(rng);
    MclstDesignOptions options;
    options.exact = true;
    options.candidate_paths = 4;
    const auto designed = design_min_mclst_routing(sample.physical(),
                                                   sample.logical(), options);
    std::vector<std::vector<PhysicalPath>> candidates;
    const std::vector<long long> unit(sample.physical().link_count(), 1);
    for (auto [s, t] : sample.logical().links())
      candidates.push_back(k_shortest_paths(sample.physical(), unit, 0, s, t, 4));
    std::vector<std::size_t> choice(candidates.size(), 0);
    int best = -1;
    while (true) {
      std::vector<PhysicalPath> routes;
      for (std::size_t e = 0; e < choice.size(); ++e)
        routes.push_back(candidates[e][choice[e]]);
      const int size = mclst(LayeredNetwork::create(sample.physical(),
                                                    sample.logical(), routes))
                           .mclst_size;
      if (best < 0 || size < best) best = size;
      std::size_t position = choice.size();
      while (position > 0 &&
             choice[position - 1] + 1 == candidates[position - 1].size())
        choice[--position] = 0;
      if (position == 0) break;
      ++choice[position - 1];
    }
    if (mclst(designed).mclst_size != best)
      return require(false, detail, "exact design missed the optimum");
  }
  return true;
}

bool criterion_monte_carlo(std::string& detail) {
  const std::vector<LayeredNetwork> nets{tri_shared(), tri_disjoint(),
                                         tri_shared_padded(), square_k4()};
  const long long trials = 1'000'000;
  for (const auto& net : nets) {
    const FailurePolynomial polynomial(cut_vector(net));
    for (double p : {0.01, 0.1, 0.5, 0.9}) {
      const double exact = polynomial(p);
      const auto estimate = monte_carlo_failure(net, p, trials, 20'240'811);
      const double sigma = std::sqrt(exact * (1.0 - exact) / trials);
      if (std::abs(estimate.estimate - exact) > 4.0 * sigma)
        return require(false, detail,
                       "estimate off by more than 4 standard errors at p=" +
                           std::to_string(p));
      const auto repeat = monte_carlo_failure(net, p, 1000, 20'240'811);
      const auto repeat2 = monte_carlo_failure(net, p, 1000, 20'240'811);
      if (repeat.estimate != repeat2.estimate)
        return require(false, detail, "estimator is not seed-deterministic");
    }
  }
  return true;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"closed-form-polynomials", criterion_closed_form_polynomials},
      {"crossover-root", criterion_crossover},
      {"lex-bound-soundness", criterion_lex_bound_soundness},
      {"regime-bound-soundness", criterion_regime_bound_soundness},
      {"conversion-predicates", criterion_conversion_predicates},
      {"d-approximation", criterion_d_approximation},
      {"iterative-rerouting", criterion_iterative_rerouting},
      {"augmentation-monotonicity", criterion_augmentation},
      {"mclst-consistency", criterion_mclst},
      {"monte-carlo", criterion_monte_carlo},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto started = std::chrono::steady_clock::now();
    std::string note;
    bool pass = false;
    try {
      pass = criteria[i].run(note);
    } catch (const std::exception& error) {
      note = error.what();
    }
    const double seconds = std::chrono::duration<double>(
                               std::chrono::steady_clock::now() - started)
                               .count();
    std::printf("[%2zu] %-26s %s (%.2fs)%s%s\n", i + 1, criteria[i].name,
                pass ? "PASS" : "FAIL", seconds, note.empty() ? "" : " - ",
                note.c_str());
    if (!pass) ++failures;
  }
  return failures;
}
