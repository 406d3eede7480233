#include <doctest.h>

#include <random>
#include <stdexcept>

#include "crossrel/ordering.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace crossrel;
using namespace crossrel::testing;

namespace {

CutVector vec(std::initializer_list<long long> counts) {
  CutVector out;
  out.m = static_cast<int>(counts.size()) - 1;
  out.known_up_to = out.m;
  for (long long value : counts) out.counts.emplace_back(value);
  return out;
}

}  // namespace

TEST_CASE("lexicographic comparison") {
  // A routing with larger MCLC is lexicographically smaller.
  const auto first = vec({0, 0, 0, 0, 20, 26, 1});
  const auto second = vec({0, 0, 0, 9, 19, 30, 1});
  const auto comparison = lex_compare(first, second);
  CHECK(comparison.direction == Direction::first_smaller);
  CHECK(*comparison.first_diff == 3);

  CHECK(lex_compare(first, first).direction == Direction::equal);
  CHECK(lex_compare(vec({0, 0, 3, 1}), vec({0, 3, 3, 1})).direction ==
        Direction::first_smaller);
  CHECK_THROWS_AS(lex_compare(vec({0, 1}), vec({0, 0, 1})),
                  std::invalid_argument);
}

TEST_CASE("k-lexicographic degree") {
  CHECK(k_lex_degree(vec({0, 0, 1, 5}), vec({0, 1, 0, 5})) == 3);
  CHECK(k_lex_degree(vec({0, 0, 2, 1}), vec({0, 1, 0, 2})) == 1);
  // Elementwise dominance gives the maximal degree m - d + 1.
  CHECK(k_lex_degree(vec({0, 0, 3, 1}), vec({0, 3, 3, 1})) == 3);
  CHECK_THROWS_AS(k_lex_degree(vec({0, 3, 3, 1}), vec({0, 0, 3, 1})),
                  std::invalid_argument);
}

TEST_CASE("k-lexicographic degree matches the definition oracle") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 500; ++round) {
    const int m = 3 + static_cast<int>(rng() % 5);
    std::vector<long long> a(m + 1), b(m + 1);
    for (int i = 0; i <= m; ++i) {
      a[i] = static_cast<long long>(rng() % 5);
      b[i] = static_cast<long long>(rng() % 5);
    }
    const int expected = oracle_k_lex_degree(a, b);
    if (expected == 0) continue;
    CutVector first, second;
    first.m = second.m = m;
    first.known_up_to = second.known_up_to = m;
    for (int i = 0; i <= m; ++i) {
      first.counts.emplace_back(a[i]);
      second.counts.emplace_back(b[i]);
    }
    CHECK(k_lex_degree(first, second) == expected);
  }
}

TEST_CASE("simple low-regime bound") {
  CHECK(low_regime_bound_simple(vec({0, 0, 0, 0, 20, 26, 1}),
                                vec({0, 0, 0, 9, 19, 30, 1})) ==
        BigRat(4 * 9, 2 * 6 * 20));
  CHECK(low_regime_bound_simple(vec({0, 0, 3, 1}), vec({0, 3, 3, 1})) ==
        BigRat(1, 3));
  CHECK_THROWS_AS(low_regime_bound_simple(vec({0, 1}), vec({0, 1})),
                  std::invalid_argument);
}

TEST_CASE("full low-regime bound") {
  SUBCASE("elementwise dominance certifies the whole low half") {
    const auto result = low_regime_bound(vec({0, 0, 3, 1}), vec({0, 3, 3, 1}));
    CHECK(*result.regime_bound == BigRat(1, 2));
    CHECK(*result.degree == 3);
  }
  SUBCASE("a tail excess shrinks the certified regime") {
    const auto first = vec({0, 0, 3, 1});
    const auto second = vec({0, 2, 2, 1});
    const auto result = low_regime_bound(first, second);
    REQUIRE(result.regime_bound.has_value());
    CHECK(*result.regime_bound == BigRat(1, 2));  // residual turns nonpositive
    // Dominance holds on the certified interval.
    std::mt19937_64 rng(17);
    CHECK(oracle_dominates_on(FailurePolynomial(first),
                              FailurePolynomial(second), 0.0,
                              to_double(*result.regime_bound), 1000, rng));
  }
  SUBCASE("bound table carries per-j terms") {
    // d = 1, k = 1: only B_1 is available.
    const auto first = vec({0, 0, 5, 1, 1});
    const auto second = vec({0, 2, 0, 1, 1});
    const auto result = low_regime_bound(first, second);
    CHECK(*result.degree == 1);
    CHECK(result.bounds.size() == 1);
    CHECK(result.bounds[0].j == 1);
    CHECK(result.bounds[0].delta == 2);
    CHECK(*result.regime_bound == BigRat(2, 9));
    std::mt19937_64 rng(18);
    CHECK(oracle_dominates_on(FailurePolynomial(first),
                              FailurePolynomial(second), 0.0,
                              to_double(*result.regime_bound), 1000, rng));
  }
}

TEST_CASE("colexicographic machinery mirrors the reversal") {
  const auto first = cut_vector(tri_shared_padded());
  const auto second = cut_vector(tri_disjoint());

  // Shared(padded) keeps more big-failure states survivable: smaller MCLST.
  const auto comparison = colex_compare(first, second);
  CHECK(comparison.direction == Direction::first_smaller);
  CHECK(*comparison.first_diff == 3);
  CHECK(k_colex_degree(first, second) == 2);

  const auto high = high_regime_bound(first, second);
  CHECK(*high.regime_bound == BigRat(16, 21));
  CHECK(*high.regime_bound >= BigRat(1, 2));
  CHECK(*high.regime_bound <= 1);

  // C_j = 1 - B_j of the reversed problem, componentwise.
  CutVector rev_first, rev_second;
  rev_first.m = rev_second.m = first.m;
  rev_first.known_up_to = rev_second.known_up_to = first.m;
  rev_first.counts.assign(first.counts.rbegin(), first.counts.rend());
  rev_second.counts.assign(second.counts.rbegin(), second.counts.rend());
  const auto low = low_regime_bound(rev_first, rev_second);
  CHECK(*high.regime_bound == 1 - *low.regime_bound);
  REQUIRE(high.bounds.size() == low.bounds.size());
  for (std::size_t i = 0; i < low.bounds.size(); ++i)
    CHECK(high.bounds[i].bound == 1 - low.bounds[i].bound);
  CHECK(k_colex_degree(first, second) == k_lex_degree(rev_first, rev_second));

  // Dominance holds on [p0_h, 1).
  std::mt19937_64 rng(19);
  CHECK(oracle_dominates_on(FailurePolynomial(first),
                            FailurePolynomial(second),
                            to_double(*high.regime_bound), 1.0, 1000, rng));
}

TEST_CASE("shorter single lightpath dominates everywhere") {
  // Same fiber plant: a 5-ring; one logical link routed short vs long way.
  const auto scenario = parse_scenario(R"(
pnode v0
pnode v1
pnode v2
pnode v3
pnode v4
plink v0 v1
plink v1 v2
plink v2 v3
plink v3 v4
plink v4 v0
lnode v0
lnode v2
llink v0 v2
route 0: v0 v1 v2
)");
  const auto shorter = scenario.network();
  const auto longer = shorter.with_route(
      0, PhysicalPath::create(shorter.physical(), {0, 4, 3, 2}));
  const auto vec_short = cut_vector(shorter);
  const auto vec_long = cut_vector(longer);
  CHECK(colex_compare(vec_short, vec_long).direction ==
        Direction::first_smaller);
  std::mt19937_64 rng(20);
  CHECK(oracle_dominates_on(FailurePolynomial(vec_short),
                            FailurePolynomial(vec_long), 0.0, 1.0, 1000, rng));
}

TEST_CASE("elementwise dominance certifies the whole high half") {
  const auto high = high_regime_bound(cut_vector(tri_direct()),
                                      cut_vector(tri_shared()));
  CHECK(*high.regime_bound == BigRat(1, 2));
}

TEST_CASE("high-regime bound equals the clamped minimum of its terms") {
  // The sound reading of the bound: p0_h = max{1/2, min_j C_j}; the
  // complementary reading (1 minus that) would land below 1/2 and is the
  // one we do not emit.
  std::mt19937_64 rng(47);
  int checked = 0;
  for (int round = 0; round < 30; ++round) {
    const auto net_a = random_network(rng);
    const auto net_b = random_rerouted(net_a, rng);
    auto first = cut_vector(net_a);
    auto second = cut_vector(net_b);
    const auto colex = colex_compare(first, second);
    if (colex.direction == Direction::equal) continue;
    if (colex.direction == Direction::second_smaller) std::swap(first, second);
    const auto high = high_regime_bound(first, second);
    BigRat smallest = high.bounds.front().bound;
    for (const auto& term : high.bounds)
      smallest = std::min(smallest, term.bound);
    CHECK(*high.regime_bound == std::max(BigRat(1, 2), smallest));
    CHECK(*high.regime_bound >= BigRat(1, 2));
    ++checked;
  }
  CHECK(checked > 5);
}

TEST_CASE("high-regime bound rejects a colex-larger first argument") {
  CHECK_THROWS_AS(high_regime_bound(cut_vector(tri_disjoint()),
                                    cut_vector(tri_shared_padded())),
                  std::invalid_argument);
}

TEST_CASE("dominance classification") {
  const auto shared = cut_vector(tri_shared());
  const auto direct = cut_vector(tri_direct());
  SUBCASE("elementwise dominance") {
    const auto result = dominance_check(direct, shared);
    CHECK(result.classification == DominanceClass::uniform_dominant);
    CHECK(result.favored == Direction::first_smaller);
  }
  SUBCASE("equality is weak uniform dominance") {
    const auto result = dominance_check(shared, shared);
    CHECK(result.classification == DominanceClass::uniform_dominant);
    CHECK(result.favored == Direction::equal);
  }
  SUBCASE("crossing pair is incomparable") {
    const auto result = dominance_check(cut_vector(tri_disjoint()),
                                        cut_vector(tri_shared_padded()));
    CHECK(result.classification == DominanceClass::incomparable);
    CHECK(result.lex.direction == Direction::first_smaller);
    CHECK(result.colex.direction == Direction::second_smaller);
  }
  SUBCASE("partial-sum dominance without elementwise dominance") {
    // Forward and backward partial sums dominate, but N_2 > M_2.
    const auto first = vec({0, 0, 2, 0, 1});
    const auto second = vec({0, 1, 1, 1, 1});
    const auto result = dominance_check(first, second);
    CHECK(result.classification == DominanceClass::both_partial);
    CHECK(result.favored == Direction::first_smaller);
    std::mt19937_64 rng(21);
    CHECK(oracle_dominates_on(FailurePolynomial(first),
                              FailurePolynomial(second), 0.0, 1.0, 1000, rng));
  }
}

TEST_CASE("partial sums") {
  const auto sums = partial_sums(vec({0, 3, 3, 1}));
  CHECK(sums.forward == std::vector<BigInt>{0, 3, 6, 7});
  CHECK(sums.backward == std::vector<BigInt>{1, 4, 7, 7});
}

TEST_CASE("regime bounds are sound on random routing pairs") {
  std::mt19937_64 rng(2718);
  int compared = 0;
  for (int round = 0; round < 40; ++round) {
    const auto net_a = random_network(rng);
    const auto net_b = random_rerouted(net_a, rng);
    auto first = cut_vector(net_a);
    auto second = cut_vector(net_b);
    auto lex = lex_compare(first, second);
    if (lex.direction == Direction::equal) continue;
    if (lex.direction == Direction::second_smaller) std::swap(first, second);
    ++compared;
    const FailurePolynomial poly_first(first);
    const FailurePolynomial poly_second(second);

    const double simple = to_double(low_regime_bound_simple(first, second));
    CHECK(oracle_dominates_on(poly_first, poly_second, 0.0, simple, 200, rng));

    const auto low = low_regime_bound(first, second);
    CHECK(oracle_dominates_on(poly_first, poly_second, 0.0,
                              to_double(*low.regime_bound), 200, rng));

    auto colex = colex_compare(first, second);
    const auto& colex_small = colex.direction == Direction::first_smaller
                                  ? first
                                  : second;
    const auto& colex_large = colex.direction == Direction::first_smaller
                                  ? second
                                  : first;
    const auto high = high_regime_bound(colex_small, colex_large);
    CHECK(oracle_dominates_on(FailurePolynomial(colex_small),
                              FailurePolynomial(colex_large),
                              to_double(*high.regime_bound), 1.0, 200, rng));
  }
  CHECK(compared > 10);
}

TEST_CASE("larger MCLC wins the low regime") {
  // A larger MCLC makes a routing lexicographically smaller, so it must
  // win the low regime.
  std::mt19937_64 rng(31415);
  int found = 0;
  for (int round = 0; round < 60 && found < 5; ++round) {
    const auto net_a = random_network(rng);
    const auto net_b = random_rerouted(net_a, rng);
    const auto first = cut_vector(net_a);
    const auto second = cut_vector(net_b);
    if (!first.mclc_d || !second.mclc_d) continue;
    if (*first.mclc_d <= *second.mclc_d) continue;
    ++found;
    const double p0 = to_double(low_regime_bound_simple(first, second));
    CHECK(oracle_dominates_on(FailurePolynomial(first),
                              FailurePolynomial(second), 0.0, p0, 500, rng));
  }
  CHECK(found > 0);
}
