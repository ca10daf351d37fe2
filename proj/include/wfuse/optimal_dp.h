#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wfuse/rational.h"

namespace wfuse {

// Optimal expected cost of every w_n (n = 1..max_n) over all binary fusion
// strategies without recycling:
//   R_opt[w_n] = min_{k=1..n-1} (R_opt[w_k] + R_opt[w_{n-k}]) / P_s(w_k, w_{n-k}).
// Ties go to the smallest k, so best splits always satisfy k <= n - k.
class CostTable {
 public:
  struct Entry {
    Rational cost;
    std::optional<std::uint32_t> best_split;  // k of the split (k, n-k); none for w_1
  };

  const Entry& at(std::uint32_t n) const;
  const Rational& cost(std::uint32_t n) const { return at(n).cost; }
  std::uint32_t max_index() const { return static_cast<std::uint32_t>(entries_.size()); }

 private:
  friend CostTable optimal_costs(std::uint32_t max_n);
  std::vector<Entry> entries_;  // entries_[n-1] describes w_n
};

CostTable optimal_costs(std::uint32_t max_n);

// Binary fusion tree with w_1 leaves.
struct FusionTree {
  std::uint32_t size = 1;            // lower-case index of the produced state
  std::vector<FusionTree> children;  // empty for a leaf, otherwise exactly two

  bool is_leaf() const { return children.empty(); }
  const FusionTree& left() const { return children.at(0); }
  const FusionTree& right() const { return children.at(1); }
};

FusionTree optimal_plan(const CostTable& table, std::uint32_t n);

// Expected cost of a tree when every fusion's inputs are re-bought on failure.
Rational composed_cost(const FusionTree& tree);

// "1" for a leaf, "(left,right)" otherwise.
std::string to_string(const FusionTree& tree);

}  // namespace wfuse
