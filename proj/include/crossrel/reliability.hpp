#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "crossrel/graph.hpp"
#include "crossrel/numbers.hpp"

namespace crossrel {

struct EnumerationLimits {
  // Full-vector enumeration walks all 2^m states; refuse beyond this.
  int full_enumeration_max_links = 24;
};

// Per-size counts N_0..N_m of cross-layer cuts. A truncated vector knows the
// counts only up to known_up_to; mclc_d/colex_c are populated when they are
// determinable from the enumerated range.
struct CutVector {
  int m = 0;
  int known_up_to = 0;
  std::vector<BigInt> counts;  // size m+1, trusted through known_up_to
  std::optional<int> mclc_d;
  std::optional<BigInt> mclc_count;
  std::optional<int> colex_c;

  bool complete() const { return known_up_to == m; }
  bool operator==(const CutVector& other) const {
    return m == other.m && known_up_to == other.known_up_to &&
           counts == other.counts;
  }
};

// F(p) = sum_i N_i p^i (1-p)^(m-i); requires a complete vector.
class FailurePolynomial {
 public:
  explicit FailurePolynomial(CutVector vector);

  // Binomial-form evaluation with compensated summation; rejects p outside
  // [0, 1].
  double operator()(double p) const;
  double reliability(double p) const { return 1.0 - (*this)(p); }

  // Exact standard-basis coefficients a_j of F(p) = sum_j a_j p^j.
  std::vector<BigInt> coefficients() const;

  const CutVector& vector() const { return vector_; }

 private:
  CutVector vector_;
};

struct SpanningTreeStats {
  int mclst_size = 0;    // minimum #links whose survival keeps G_L connected
  BigInt mclst_count;    // minimum-size minimal survival sets
  std::uint64_t witness = 0;  // one minimum survival set, as a link mask
};

struct MonteCarloEstimate {
  double estimate = 0.0;
  long long trials = 0;
  std::uint64_t seed = 0;
  double std_error = 0.0;
};

// Exact cut vector. With max_size, only sizes <= max_size are enumerated and
// larger counts are marked unknown; otherwise all 2^m states are visited
// (rejecting m above the ceiling).
CutVector cut_vector(const LayeredNetwork& net,
                     std::optional<int> max_size = std::nullopt,
                     const EnumerationLimits& limits = {});

double failure_probability(const CutVector& vector, double p);

// Smallest cut size d and the exact count N_d; enumerates sizes 1, 2, ...
// and stops at the first size with a cut, so it never needs the full vector.
std::pair<int, BigInt> mclc(const LayeredNetwork& net);

// Minimum cross-layer spanning tree via survival-set enumeration, ascending
// from |V_L|-1; at the minimum size every survival set is minimal.
SpanningTreeStats mclst(const LayeredNetwork& net);

MonteCarloEstimate monte_carlo_failure(const LayeredNetwork& net, double p,
                                       long long trials, std::uint64_t seed);

namespace detail {
// Visit all m-bit masks of the given popcount in ascending numeric order.
template <typename Fn>
void for_each_subset_of_size(int m, int size, Fn&& fn) {
  if (size == 0) {
    fn(std::uint64_t{0});
    return;
  }
  if (size > m) return;
  const std::uint64_t limit = m == 64 ? ~std::uint64_t{0}
                                      : (std::uint64_t{1} << m) - 1;
  if (size == m) {
    fn(limit);
    return;
  }
  std::uint64_t mask = (std::uint64_t{1} << size) - 1;
  while (true) {
    fn(mask);
    if (mask == (limit & ~((std::uint64_t{1} << (m - size)) - 1))) break;
    // Gosper's hack: next mask with the same popcount.
    const std::uint64_t lowest = mask & (~mask + 1);
    const std::uint64_t ripple = mask + lowest;
    mask = ripple | (((mask ^ ripple) >> 2) / lowest);
  }
}
}  // namespace detail

}  // namespace crossrel
