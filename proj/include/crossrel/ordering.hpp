#pragma once

#include <optional>
#include <vector>

#include "crossrel/numbers.hpp"
#include "crossrel/reliability.hpp"

namespace crossrel {

struct PartialSums {
  std::vector<BigInt> forward;   // forward[k]  = sum_{i<=k}   N_i
  std::vector<BigInt> backward;  // backward[k] = sum_{i>=m-k} N_i
};

PartialSums partial_sums(const CutVector& vector);

enum class Direction { first_smaller, second_smaller, equal };

// One row of a regime-bound table: B_j for the low regime, C_j = 1 - B_j for
// the high regime. `promoted` marks the nonpositive-residual branch where
// dominance extends as if every prefix sum dominated.
struct BoundTerm {
  int j = 0;
  BigInt delta;                     // running cut surplus at j
  std::optional<BigRat> residual;   // worst tail excess per C(m,i); none at j=m
  BigRat bound;
  bool promoted = false;
};

struct LexComparison {
  Direction direction = Direction::equal;
  std::optional<int> first_diff;      // d; for colex results, the index in the
                                      // reversed vectors (c)
  std::optional<int> degree;          // k
  std::vector<BoundTerm> bounds;      // indexed j = d .. d+k-1
  std::optional<BigRat> regime_bound; // p0_l (low) or p0_h (high)
};

// First-difference comparison from the smallest cut sizes. Rejects vectors
// of mismatched m or incomplete vectors.
LexComparison lex_compare(const CutVector& first, const CutVector& second);

// Depth of prefix-sum dominance; defined only when first is lex smaller.
int k_lex_degree(const CutVector& first, const CutVector& second);

// Guaranteed low-regime bound from the first differing coefficient alone:
// p0 = (d+1)(M_d - N_d) / (2m C(m,d)).
BigRat low_regime_bound_simple(const CutVector& first, const CutVector& second);

// Full low-regime bound: p0_l = min{1/2, max_j B_j} over j = d .. d+k-1 with
// the nonpositive-residual branch promoting the term to 1/2.
LexComparison low_regime_bound(const CutVector& first, const CutVector& second);

// Colexicographic machinery: everything runs through the reversal
// N'_i = N_{m-i}, so indices in the result are reversed-frame.
LexComparison colex_compare(const CutVector& first, const CutVector& second);
int k_colex_degree(const CutVector& first, const CutVector& second);

// High-regime bound p0_h = 1 - min{1/2, max_j B_j(reversed)}; the emitted
// table holds C_j = 1 - B_j and the bound always lands in [1/2, 1).
LexComparison high_regime_bound(const CutVector& first, const CutVector& second);

enum class DominanceClass {
  uniform_dominant,  // elementwise dominance (weak form covers equality)
  both_partial,      // forward and backward partial-sum dominance
  low_regime,
  high_regime,
  incomparable,      // lex and colex favor different routings
};

struct DominanceResult {
  DominanceClass classification = DominanceClass::incomparable;
  Direction favored = Direction::equal;
  bool forward_dominant = false;   // partial-sum dominance for the favored side
  bool backward_dominant = false;
  LexComparison lex;    // low-regime bound for the lex-smaller routing
  LexComparison colex;  // high-regime bound for the colex-smaller routing
};

DominanceResult dominance_check(const CutVector& first, const CutVector& second);

}  // namespace crossrel
