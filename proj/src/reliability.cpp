#include "crossrel/reliability.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <thread>

#include "crossrel/errors.hpp"

namespace crossrel {
namespace {

// Counts disconnected states per size over a contiguous range of masks.
void count_range(const LayeredNetwork& net, std::uint64_t begin,
                 std::uint64_t end, std::vector<std::uint64_t>& by_size) {
  for (std::uint64_t mask = begin; mask < end; ++mask)
    if (detail::residual_component_count(net, mask) > 1)
      ++by_size[std::popcount(mask)];
}

void fill_connectivity_metadata(CutVector& vec, int logical_nodes) {
  for (int i = 0; i <= vec.known_up_to; ++i) {
    if (vec.counts[i] > 0) {
      vec.mclc_d = i;
      vec.mclc_count = vec.counts[i];
      break;
    }
  }
  if (vec.complete() && logical_nodes >= 2) {
    for (int i = vec.m; i >= 0; --i) {
      if (vec.counts[i] < binomial(vec.m, i)) {
        vec.colex_c = i;
        break;
      }
    }
  }
  // Supersets of cuts are cuts, so the cut fraction N_i / C(m,i) must be
  // nondecreasing; a violation means the enumeration itself is broken.
  for (int i = 0; i < vec.known_up_to; ++i) {
    if (vec.counts[i] * binomial(vec.m, i + 1) >
        vec.counts[i + 1] * binomial(vec.m, i))
      throw std::logic_error("cut fraction not monotone");
  }
}

}  // namespace

CutVector cut_vector(const LayeredNetwork& net, std::optional<int> max_size,
                     const EnumerationLimits& limits) {
  const int m = net.physical().link_count();
  CutVector vec;
  vec.m = m;
  vec.counts.assign(m + 1, BigInt{0});

  if (max_size && *max_size < m) {
    vec.known_up_to = std::max(0, *max_size);
    for (int size = 0; size <= vec.known_up_to; ++size) {
      std::uint64_t cuts = 0;
      detail::for_each_subset_of_size(m, size, [&](std::uint64_t mask) {
        if (detail::residual_component_count(net, mask) > 1) ++cuts;
      });
      vec.counts[size] = cuts;
    }
    fill_connectivity_metadata(vec, net.logical().node_count());
    return vec;
  }

  if (m > limits.full_enumeration_max_links)
    throw BudgetError("full enumeration over 2^" + std::to_string(m) +
                      " states exceeds the ceiling of 2^" +
                      std::to_string(limits.full_enumeration_max_links) +
                      "; pass max_size or use Monte Carlo");

  vec.known_up_to = m;
  const std::uint64_t total = std::uint64_t{1} << m;
  std::vector<std::uint64_t> by_size(m + 1, 0);
  const unsigned hardware = std::thread::hardware_concurrency();
  if (m >= 20 && hardware > 1) {
    // Partition the state space by leading bits; per-partition tallies are
    // reduced in partition order, so the result is independent of the
    // thread count.
    const unsigned parts = std::min<unsigned>(hardware, 16);
    std::vector<std::vector<std::uint64_t>> partial(
        parts, std::vector<std::uint64_t>(m + 1, 0));
    std::vector<std::thread> workers;
    for (unsigned part = 0; part < parts; ++part) {
      const std::uint64_t begin = total / parts * part;
      const std::uint64_t end =
          part + 1 == parts ? total : total / parts * (part + 1);
      workers.emplace_back([&, part, begin, end] {
        count_range(net, begin, end, partial[part]);
      });
    }
    for (auto& worker : workers) worker.join();
    for (const auto& counts : partial)
      for (int i = 0; i <= m; ++i) by_size[i] += counts[i];
  } else {
    count_range(net, 0, total, by_size);
  }
  for (int i = 0; i <= m; ++i) vec.counts[i] = by_size[i];
  fill_connectivity_metadata(vec, net.logical().node_count());
  return vec;
}

FailurePolynomial::FailurePolynomial(CutVector vector)
    : vector_(std::move(vector)) {
  if (!vector_.complete())
    throw std::invalid_argument("failure polynomial needs a complete vector");
}

double FailurePolynomial::operator()(double p) const {
  return failure_probability(vector_, p);
}

std::vector<BigInt> FailurePolynomial::coefficients() const {
  // p^i (1-p)^(m-i) = sum_k C(m-i, k) (-1)^k p^(i+k)
  const int m = vector_.m;
  std::vector<BigInt> coefficients(m + 1, BigInt{0});
  for (int i = 0; i <= m; ++i) {
    if (vector_.counts[i] == 0) continue;
    for (int k = 0; k + i <= m; ++k) {
      BigInt term = vector_.counts[i] * binomial(m - i, k);
      if (k % 2 == 1) term = -term;
      coefficients[i + k] += term;
    }
  }
  return coefficients;
}

double failure_probability(const CutVector& vector, double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("failure probability needs p in [0,1]");
  if (!vector.complete())
    throw std::invalid_argument("failure probability needs a complete vector");
  // Kahan-compensated accumulation of the binomial-form terms.
  double sum = 0.0, compensation = 0.0;
  for (int i = 0; i <= vector.m; ++i) {
    if (vector.counts[i] == 0) continue;
    const double term = to_double(vector.counts[i]) * std::pow(p, i) *
                        std::pow(1.0 - p, vector.m - i);
    const double y = term - compensation;
    const double t = sum + y;
    compensation = (t - sum) - y;
    sum = t;
  }
  return std::clamp(sum, 0.0, 1.0);
}

std::pair<int, BigInt> mclc(const LayeredNetwork& net) {
  if (net.logical().node_count() < 2)
    throw std::invalid_argument("mclc needs at least two logical nodes");
  const int m = net.physical().link_count();
  for (int size = 1; size <= m; ++size) {
    std::uint64_t cuts = 0;
    detail::for_each_subset_of_size(m, size, [&](std::uint64_t mask) {
      if (detail::residual_component_count(net, mask) > 1) ++cuts;
    });
    if (cuts > 0) return {size, BigInt{cuts}};
  }
  throw std::logic_error("no cross-layer cut found up to full failure");
}

SpanningTreeStats mclst(const LayeredNetwork& net) {
  if (net.logical().node_count() < 2)
    throw std::invalid_argument("mclst needs at least two logical nodes");
  const int m = net.physical().link_count();
  const std::uint64_t all =
      m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
  for (int size = net.logical().node_count() - 1; size <= m; ++size) {
    std::uint64_t count = 0;
    std::uint64_t witness = 0;
    detail::for_each_subset_of_size(m, size, [&](std::uint64_t survivors) {
      // Survival of exactly `survivors` keeps G_L connected?
      if (detail::residual_component_count(net, all & ~survivors) == 1) {
        if (count == 0) witness = survivors;
        ++count;
      }
    });
    if (count > 0) return {size, BigInt{count}, witness};
  }
  throw std::logic_error("logical topology unreachable even with all links");
}

MonteCarloEstimate monte_carlo_failure(const LayeredNetwork& net, double p,
                                       long long trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("monte carlo needs trials >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("monte carlo needs p in [0,1]");
  // mt19937_64 with 53-bit uniforms; one coin flip per physical link per
  // trial, so runs are reproducible from the seed alone.
  std::mt19937_64 rng(seed);
  auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  const int m = net.physical().link_count();
  long long disconnected = 0;
  for (long long trial = 0; trial < trials; ++trial) {
    std::uint64_t failed = 0;
    for (int link = 0; link < m; ++link)
      if (uniform() < p) failed |= std::uint64_t{1} << link;
    if (detail::residual_component_count(net, failed) > 1) ++disconnected;
  }
  MonteCarloEstimate estimate;
  estimate.estimate = static_cast<double>(disconnected) / trials;
  estimate.trials = trials;
  estimate.seed = seed;
  estimate.std_error =
      std::sqrt(estimate.estimate * (1.0 - estimate.estimate) / trials);
  return estimate;
}

}  // namespace crossrel
