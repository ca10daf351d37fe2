#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "wfuse/analytic_costs.h"
#include "wfuse/optimal_dp.h"

using namespace wfuse;

namespace {

// Costs of every full binary fusion tree over n leaves of w_1, one entry per
// tree shape, built without any minimization.
std::vector<std::vector<Rational>> all_tree_costs(std::uint32_t max_leaves) {
  std::vector<std::vector<Rational>> costs(max_leaves + 1);
  costs[1] = {Rational(1)};
  for (std::uint32_t n = 2; n <= max_leaves; ++n) {
    for (std::uint32_t left = 1; left < n; ++left) {
      const Rational factor = ratio((left + 2) * (n - left + 2), n + 2);
      for (const Rational& a : costs[left]) {
        for (const Rational& b : costs[n - left]) {
          costs[n].push_back(factor * (a + b));
        }
      }
    }
  }
  return costs;
}

}  // namespace

TEST_CASE("golden optimal costs and splits") {
  const CostTable t = optimal_costs(5);
  CHECK(t.at(1).cost == 1);
  CHECK_FALSE(t.at(1).best_split.has_value());
  CHECK(t.at(2).cost == ratio(9, 2));
  CHECK(t.at(2).best_split == 1u);
  CHECK(t.at(3).cost == ratio(66, 5));
  CHECK(t.at(3).best_split == 1u);
  CHECK(t.at(4).cost == 24);
  CHECK(t.at(4).best_split == 2u);
  CHECK(t.at(5).cost == ratio(354, 7));
  CHECK(t.at(5).best_split == 2u);
  CHECK_THROWS_AS(t.at(0), std::out_of_range);
  CHECK_THROWS_AS(t.at(6), std::out_of_range);
  CHECK_THROWS_AS(optimal_costs(0), std::invalid_argument);
}

TEST_CASE("optimal plans") {
  const CostTable t = optimal_costs(64);
  CHECK(to_string(optimal_plan(t, 1)) == "1");
  CHECK(optimal_plan(t, 1).is_leaf());
  CHECK(to_string(optimal_plan(t, 4)) == "((1,1),(1,1))");
  CHECK(to_string(optimal_plan(t, 5)) == "((1,1),(1,(1,1)))");
  for (std::uint32_t n = 1; n <= 64; ++n) {
    const FusionTree tree = optimal_plan(t, n);
    REQUIRE(tree.size == n);
    REQUIRE(composed_cost(tree) == t.cost(n));
  }
  CHECK_THROWS_AS(optimal_plan(t, 65), std::out_of_range);
}

TEST_CASE("table is monotone and splits attain the minimum") {
  const CostTable t = optimal_costs(150);
  for (std::uint32_t n = 2; n <= 150; ++n) {
    REQUIRE(t.cost(n) >= t.cost(n - 1));
    const std::uint32_t k = *t.at(n).best_split;
    REQUIRE(k <= n - k);
    REQUIRE(t.cost(n) == compose_cost(t.cost(k), t.cost(n - k), WSize(k), WSize(n - k)));
    for (std::uint32_t j = 1; j < n; ++j) {
      const Rational c = compose_cost(t.cost(j), t.cost(n - j), WSize(j), WSize(n - j));
      REQUIRE(c == compose_cost(t.cost(n - j), t.cost(j), WSize(n - j), WSize(j)));
      REQUIRE(c >= t.cost(n));
      if (j < k) {
        REQUIRE(c > t.cost(n));
      }
    }
  }
}

TEST_CASE("powers of two coincide with the doubling strategy") {
  const CostTable t = optimal_costs(128);
  for (std::uint32_t k = 0; k <= 6; ++k) {
    REQUIRE(t.cost(1u << k) == exponential_cost(k));
    const std::int64_t kk = k;
    const Rational bound = Rational(ratio(21459, 1000) * pow2(kk * (kk + 1) / 2) / (1 + pow2(kk - 1)));
    REQUIRE(t.cost(1u << k) <= bound);
  }
  // Large entries stay exact.
  CHECK(t.cost(64) > 1000000);
  CHECK(t.cost(128).get_den() > 0);
}

TEST_CASE("exhaustive tree enumeration never beats the table") {
  constexpr std::uint32_t kMaxLeaves = 12;
  const auto costs = all_tree_costs(kMaxLeaves);
  const CostTable t = optimal_costs(kMaxLeaves);
  for (std::uint32_t n = 2; n <= kMaxLeaves; ++n) {
    REQUIRE(*std::min_element(costs[n].begin(), costs[n].end()) == t.cost(n));
  }
  // Catalan(11) shapes for 12 leaves.
  CHECK(costs[12].size() == 58786);
}
