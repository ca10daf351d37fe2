#include "wfuse/analytic_costs.h"

#include <stdexcept>
#include <string>

namespace wfuse {

const Rational& CostSeries::at(std::size_t m) const {
  if (m == 0 || m > values_.size()) {
    throw std::out_of_range("cost series has no entry for w_" + std::to_string(m));
  }
  return values_[m - 1];
}

Rational compose_cost(const Rational& cost_a, const Rational& cost_b, WSize n, WSize m) {
  const std::uint64_t a = n.index();
  const std::uint64_t b = m.index();
  Rational factor = ratio(BigInt(std::to_string((a + 2) * (b + 2))), BigInt(std::to_string(a + b + 2)));
  return Rational(factor * (cost_a + cost_b));
}

Rational linear_growth_cost(const LinearGrowthParams& params, const Rational& seed_cost,
                            const Rational& increment_cost) {
  if (params.seed.index() < 1 || params.increment.index() < 1) {
    throw std::invalid_argument("linear growth needs seed and increment of index >= 1");
  }
  const Rational m = params.seed.index();
  const Rational n = params.increment.index();
  const Rational k = params.levels;

  const Rational xi = (n + 2) * increment_cost;
  const Rational alpha = -xi * n / (n + 1);
  const Rational beta = (alpha - xi * (m + 2)) / (n + 1);
  const Rational r0 = (m + 2) * seed_cost;

  BigInt growth;
  mpz_ui_pow_ui(growth.get_mpz_t(), params.increment.index() + 2, params.levels);
  const Rational r_k = (r0 - beta) * growth + alpha * k + beta;
  return Rational(r_k / (m + k * n + 2));
}

Rational w3_linear_cost(std::uint32_t n) {
  if (n < 1) {
    throw std::invalid_argument("linear chain target must be w_1 or larger");
  }
  BigInt three_pow;
  mpz_ui_pow_ui(three_pow.get_mpz_t(), 3, n);
  const Rational big_n = n;
  const Rational value = (ratio(11, 4) * three_pow - ratio(3, 2) * big_n - ratio(15, 4)) / (big_n + 2);
  return value;
}

CostSeries linear_recycled_costs(std::uint32_t max_m) {
  if (max_m < 2) {
    throw std::invalid_argument("linear_recycled_costs needs max_m >= 2");
  }
  std::vector<Rational> r;
  r.reserve(max_m);
  r.emplace_back(1);
  r.push_back(ratio(9, 2));
  for (std::uint32_t m = 2; m < max_m; ++m) {
    const OutcomeDistribution d = outcome_distribution(WSize(m), WSize(1));
    // r[m-1] is R[w_m], r[m-2] is R[w_{m-1}].
    r.emplace_back((r[m - 1] + 1 - d.p_recycle * r[m - 2]) / d.p_success);
  }
  return CostSeries(std::move(r));
}

Rational exponential_cost(std::uint32_t k) {
  Rational cost = 1;
  BigInt size = 1;  // 2^l
  for (std::uint32_t l = 0; l < k; ++l) {
    const BigInt plus_two = size + 2;
    cost *= ratio(BigInt(plus_two * plus_two), BigInt(size + 1));
    size <<= 1;
  }
  return cost;
}

Rational gamma_factor(std::uint32_t k) {
  Rational g = ratio(3, 2);
  for (std::uint32_t l = 0; l < k; ++l) {
    g *= 1 + pow2(1 - static_cast<std::int64_t>(l));
  }
  return g;
}

Rational exponential_cost_closed_form(std::uint32_t k) {
  const std::int64_t kk = k;
  return Rational(gamma_factor(k) * pow2(kk * (kk + 1) / 2) / (1 + pow2(kk - 1)));
}

}  // namespace wfuse
