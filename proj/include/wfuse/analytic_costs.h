#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "wfuse/core_model.h"
#include "wfuse/rational.h"

namespace wfuse {

// Costs are counted in units of w_1 (the three-photon W state, cost 1).

// Values indexed by the lower-case size, starting at w_1.
class CostSeries {
 public:
  CostSeries() = default;
  explicit CostSeries(std::vector<Rational> from_w1) : values_(std::move(from_w1)) {}

  const Rational& at(std::size_t m) const;
  std::size_t max_index() const { return values_.size(); }
  const std::vector<Rational>& values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

// Repeatedly fuse w_n onto a growing state that starts as w_m; after k
// successful levels the state is w_{m+kn}.
struct LinearGrowthParams {
  WSize seed;        // m >= 1
  WSize increment;   // n >= 1
  std::uint32_t levels = 0;

  WSize target() const { return WSize(seed.index() + levels * increment.index()); }
};

// Expected cost of w_{n+m} when both inputs are bought anew on every attempt:
// (cost_a + cost_b) / P_s(w_n, w_m).
Rational compose_cost(const Rational& cost_a, const Rational& cost_b, WSize n, WSize m);

// Closed-form solution of the linear growth recurrence
//   r_{k+1} = (n+2) r_k + xi (m+kn+2),   r_k = (m+kn+2) R[w_{m+kn}],
// with xi = (n+2) R[w_n]:
//   r_k = (r_0 - beta)(n+2)^k + alpha k + beta,
//   alpha = -xi n/(n+1),  beta = (alpha - xi(m+2))/(n+1).
Rational linear_growth_cost(const LinearGrowthParams& params, const Rational& seed_cost,
                            const Rational& increment_cost);

// Cost of w_N built by fusing w_1 onto a growing chain, no recycling:
//   R[w_N] = (11/4 3^N - 3/2 N - 15/4) / (N+2).
Rational w3_linear_cost(std::uint32_t n);

// Linear growth by w_1 where a recyclable outcome keeps the shortened chain:
//   p_m R[w_{m+1}] = R[w_m] + 1 - q_m R[w_{m-1}],
// p_m = P_s(w_m, w_1), q_m = P_r(w_m, w_1), seeded with R[w_1] = 1,
// R[w_2] = 9/2. Entries 1..max_m.
CostSeries linear_recycled_costs(std::uint32_t max_m);

// R[w_{2^k}] for the doubling strategy without recycling, iterated from
//   R[w_{2^{l+1}}] = (2^l + 2)^2 / (2^l + 1) * R[w_{2^l}],  R[w_1] = 1.
Rational exponential_cost(std::uint32_t k);

// Bounded prefactor (gamma_k) of the doubling cost,
//   R[w_{2^k}] = gamma_factor(k) 2^{k(k+1)/2} / (1 + 2^{k-1}),
//   gamma_factor(k) = 3/2 prod_{l=0}^{k-1} (1 + 2^{1-l}).
//
// The exponent is 1-l, not l-1. Substituting a_l = (1 + 2^{l-1}) R[w_{2^l}]
// into the doubling recurrence gives a_{l+1} = 2^{l+1}(1 + 2^{1-l}) a_l, and
// only this form reproduces R[w_2] = 9/2, R[w_4] = 24 and the limit
// gamma_factor(inf) = 21.458... The (1 + 2^{l-1}) variant grows without bound.
Rational gamma_factor(std::uint32_t k);

// Right-hand side of the gamma identity, for cross-checking exponential_cost.
Rational exponential_cost_closed_form(std::uint32_t k);

}  // namespace wfuse
