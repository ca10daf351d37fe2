#include "wfuse/optimal_dp.h"

#include <stdexcept>

#include "wfuse/analytic_costs.h"

namespace wfuse {

const CostTable::Entry& CostTable::at(std::uint32_t n) const {
  if (n == 0 || n > entries_.size()) {
    throw std::out_of_range("cost table has no entry for w_" + std::to_string(n));
  }
  return entries_[n - 1];
}

CostTable optimal_costs(std::uint32_t max_n) {
  if (max_n < 1) {
    throw std::invalid_argument("optimal_costs needs max_n >= 1");
  }
  CostTable table;
  table.entries_.reserve(max_n);
  table.entries_.push_back({Rational(1), std::nullopt});
  for (std::uint32_t n = 2; n <= max_n; ++n) {
    Rational best;
    std::uint32_t best_k = 0;
    // Splits (k, n-k) and (n-k, k) cost the same, so k <= n/2 suffices and
    // strict improvement keeps the smallest k on ties.
    for (std::uint32_t k = 1; k <= n / 2; ++k) {
      Rational c = compose_cost(table.cost(k), table.cost(n - k), WSize(k), WSize(n - k));
      if (best_k == 0 || c < best) {
        best = std::move(c);
        best_k = k;
      }
    }
    table.entries_.push_back({std::move(best), best_k});
  }
  return table;
}

FusionTree optimal_plan(const CostTable& table, std::uint32_t n) {
  const CostTable::Entry& entry = table.at(n);
  FusionTree tree;
  tree.size = n;
  if (entry.best_split) {
    const std::uint32_t k = *entry.best_split;
    tree.children.push_back(optimal_plan(table, k));
    tree.children.push_back(optimal_plan(table, n - k));
  }
  return tree;
}

Rational composed_cost(const FusionTree& tree) {
  if (tree.is_leaf()) {
    return 1;
  }
  return compose_cost(composed_cost(tree.left()), composed_cost(tree.right()),
                      WSize(tree.left().size), WSize(tree.right().size));
}

std::string to_string(const FusionTree& tree) {
  if (tree.is_leaf()) {
    return "1";
  }
  return "(" + to_string(tree.left()) + "," + to_string(tree.right()) + ")";
}

}  // namespace wfuse
