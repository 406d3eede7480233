#include "crossrel/ordering.hpp"

#include <algorithm>
#include <stdexcept>

namespace crossrel {
namespace {

void require_comparable(const CutVector& first, const CutVector& second) {
  if (first.m != second.m)
    throw std::invalid_argument("cut vectors have different link counts");
  if (!first.complete() || !second.complete())
    throw std::invalid_argument("cut vector comparison needs complete vectors");
}

CutVector reversed(const CutVector& vector) {
  CutVector result;
  result.m = vector.m;
  result.known_up_to = vector.m;
  result.counts.assign(vector.counts.rbegin(), vector.counts.rend());
  return result;
}

int first_difference(const CutVector& first, const CutVector& second) {
  for (int i = 0; i <= first.m; ++i)
    if (first.counts[i] != second.counts[i]) return i;
  return -1;
}

// max_{j+1 <= i <= m} (N_i - M_i) / C(m, i)
BigRat tail_residual(const CutVector& first, const CutVector& second, int j) {
  BigRat worst;
  bool any = false;
  for (int i = j + 1; i <= first.m; ++i) {
    BigRat value(first.counts[i] - second.counts[i], binomial(first.m, i));
    if (!any || value > worst) {
      worst = value;
      any = true;
    }
  }
  return worst;
}

}  // namespace

PartialSums partial_sums(const CutVector& vector) {
  if (!vector.complete())
    throw std::invalid_argument("partial sums need a complete vector");
  PartialSums sums;
  const int m = vector.m;
  sums.forward.resize(m + 1);
  sums.backward.resize(m + 1);
  BigInt acc = 0;
  for (int k = 0; k <= m; ++k) {
    acc += vector.counts[k];
    sums.forward[k] = acc;
  }
  acc = 0;
  for (int k = 0; k <= m; ++k) {
    acc += vector.counts[m - k];
    sums.backward[k] = acc;
  }
  return sums;
}

LexComparison lex_compare(const CutVector& first, const CutVector& second) {
  require_comparable(first, second);
  LexComparison result;
  const int d = first_difference(first, second);
  if (d < 0) {
    result.direction = Direction::equal;
    return result;
  }
  result.first_diff = d;
  result.direction = first.counts[d] < second.counts[d]
                         ? Direction::first_smaller
                         : Direction::second_smaller;
  return result;
}

int k_lex_degree(const CutVector& first, const CutVector& second) {
  const auto comparison = lex_compare(first, second);
  if (comparison.direction != Direction::first_smaller)
    throw std::invalid_argument("k-lex degree needs a lex-smaller first vector");
  const int d = *comparison.first_diff;
  const int m = first.m;
  const auto sums_first = partial_sums(first);
  const auto sums_second = partial_sums(second);
  // k = max{j : forward_first[i] <= forward_second[i] for all i < d+j}
  int k = 0;
  for (int j = 1; j <= m - d + 1; ++j) {
    const int i = std::min(d + j - 1, m);
    if (sums_first.forward[i] > sums_second.forward[i]) break;
    k = j;
  }
  return k;
}

BigRat low_regime_bound_simple(const CutVector& first, const CutVector& second) {
  const auto comparison = lex_compare(first, second);
  if (comparison.direction != Direction::first_smaller)
    throw std::invalid_argument("bound needs a lex-smaller first vector");
  const int d = *comparison.first_diff;
  const BigInt gap = second.counts[d] - first.counts[d];
  return BigRat(BigInt(d + 1) * gap, BigInt(2 * first.m) * binomial(first.m, d));
}

LexComparison low_regime_bound(const CutVector& first, const CutVector& second) {
  LexComparison result = lex_compare(first, second);
  if (result.direction != Direction::first_smaller)
    throw std::invalid_argument("bound needs a lex-smaller first vector");
  const int d = *result.first_diff;
  const int m = first.m;
  const int k = k_lex_degree(first, second);
  result.degree = k;

  const BigRat half(1, 2);
  BigInt delta = 0;
  for (int i = 0; i < d; ++i) delta += second.counts[i] - first.counts[i];
  BigRat best = 0;
  for (int j = d; j <= d + k - 1; ++j) {
    delta += second.counts[j] - first.counts[j];
    BoundTerm term;
    term.j = j;
    term.delta = delta;
    if (j == m) {
      term.bound = half;
    } else {
      term.residual = tail_residual(first, second, j);
      if (*term.residual <= 0) {
        // Nonpositive tail excess extends the dominance to every prefix sum,
        // which is the j = m case.
        term.bound = half;
        term.promoted = true;
      } else if (delta == 0) {
        term.bound = 0;
      } else {
        term.bound = 1 / (BigRat(m, j + 1) +
                          *term.residual * binomial(m, j + 1) / BigRat(delta));
      }
    }
    best = std::max(best, term.bound);
    result.bounds.push_back(std::move(term));
  }
  result.regime_bound = std::min(half, best);
  return result;
}

LexComparison colex_compare(const CutVector& first, const CutVector& second) {
  return lex_compare(reversed(first), reversed(second));
}

int k_colex_degree(const CutVector& first, const CutVector& second) {
  return k_lex_degree(reversed(first), reversed(second));
}

LexComparison high_regime_bound(const CutVector& first, const CutVector& second) {
  LexComparison result = low_regime_bound(reversed(first), reversed(second));
  *result.regime_bound = 1 - *result.regime_bound;
  for (auto& term : result.bounds) term.bound = 1 - term.bound;
  if (*result.regime_bound < BigRat(1, 2) || *result.regime_bound > 1)
    throw std::logic_error("high-regime bound escaped [1/2, 1]");
  return result;
}

DominanceResult dominance_check(const CutVector& first, const CutVector& second) {
  require_comparable(first, second);
  DominanceResult result;

  const auto lex = lex_compare(first, second);
  const auto colex = colex_compare(first, second);
  if (lex.direction == Direction::equal) {
    result.classification = DominanceClass::uniform_dominant;
    result.favored = Direction::equal;
    result.forward_dominant = result.backward_dominant = true;
    result.lex = lex;
    result.colex = colex;
    return result;
  }
  // Full regime bounds for whichever routing each ordering favors.
  result.lex = lex.direction == Direction::first_smaller
                   ? low_regime_bound(first, second)
                   : low_regime_bound(second, first);
  result.lex.direction = lex.direction;
  result.colex = colex.direction == Direction::first_smaller
                     ? high_regime_bound(first, second)
                     : high_regime_bound(second, first);
  result.colex.direction = colex.direction;

  const int m = first.m;
  bool first_le = true, second_le = true;
  for (int i = 0; i <= m; ++i) {
    if (first.counts[i] > second.counts[i]) first_le = false;
    if (second.counts[i] > first.counts[i]) second_le = false;
  }
  if (first_le || second_le) {
    result.classification = DominanceClass::uniform_dominant;
    result.favored =
        first_le ? Direction::first_smaller : Direction::second_smaller;
    result.forward_dominant = result.backward_dominant = true;
    return result;
  }

  const auto sums_first = partial_sums(first);
  const auto sums_second = partial_sums(second);
  auto dominates = [m](const std::vector<BigInt>& a,
                       const std::vector<BigInt>& b) {
    for (int i = 0; i <= m; ++i)
      if (a[i] > b[i]) return false;
    return true;
  };
  const bool fwd_first = dominates(sums_first.forward, sums_second.forward);
  const bool fwd_second = dominates(sums_second.forward, sums_first.forward);
  const bool bwd_first = dominates(sums_first.backward, sums_second.backward);
  const bool bwd_second = dominates(sums_second.backward, sums_first.backward);

  if ((fwd_first && bwd_first) || (fwd_second && bwd_second)) {
    result.classification = DominanceClass::both_partial;
    result.favored =
        fwd_first ? Direction::first_smaller : Direction::second_smaller;
    result.forward_dominant = result.backward_dominant = true;
    return result;
  }

  if (lex.direction != colex.direction) {
    result.classification = DominanceClass::incomparable;
    result.favored = Direction::equal;
    return result;
  }

  // Both orderings favor the same routing without full partial-sum
  // dominance; class by whichever half-regime certificate applies.
  result.favored = lex.direction;
  const bool fwd = lex.direction == Direction::first_smaller ? fwd_first
                                                             : fwd_second;
  const bool bwd = lex.direction == Direction::first_smaller ? bwd_first
                                                             : bwd_second;
  result.forward_dominant = fwd;
  result.backward_dominant = bwd;
  result.classification = bwd && !fwd ? DominanceClass::high_regime
                                      : DominanceClass::low_regime;
  return result;
}

}  // namespace crossrel
