#include "wfuse/core_model.h"

#include <limits>

#include "wfuse/random.h"

namespace wfuse {

namespace {

// Numerators over the common denominator (n+2)(m+2).
struct OutcomeCounts {
  std::uint64_t success;
  std::uint64_t recycle;
  std::uint64_t denominator;
};

OutcomeCounts outcome_counts(WSize n, WSize m) {
  const std::uint64_t a = n.index();
  const std::uint64_t b = m.index();
  return {a + b + 2, (a + 1) * (b + 1), (a + 2) * (b + 2)};
}

}  // namespace

WSize WSize::from_photons(std::uint32_t photons) {
  if (photons < 2) {
    throw std::invalid_argument("a W state needs at least 2 photons, got " +
                                std::to_string(photons));
  }
  return WSize(photons - 2);
}

std::string to_string(WSize s) { return "w_" + std::to_string(s.index()); }

std::string to_string(Branch b) {
  switch (b) {
    case Branch::success:
      return "success";
    case Branch::recycle:
      return "recycle";
    case Branch::failure:
      return "failure";
  }
  return "unknown";
}

DegenerateRecycle::DegenerateRecycle(WSize n, WSize m)
    : std::domain_error("degenerate recycle: cannot shorten " + to_string(n) + " and " +
                        to_string(m) + " (a Bell pair has no W state one photon smaller)") {}

OutcomeDistribution outcome_distribution(WSize n, WSize m) {
  const Rational a = n.index();
  const Rational b = m.index();
  const Rational den = (a + 2) * (b + 2);
  OutcomeDistribution d{(a + b + 2) / den, (a + 1) * (b + 1) / den, 1 / den};
  d.p_success.canonicalize();
  d.p_recycle.canonicalize();
  d.p_failure.canonicalize();
  return d;
}

FusionOutcome apply_outcome(WSize n, WSize m, Branch branch) {
  switch (branch) {
    case Branch::success:
      return Success{WSize(n.index() + m.index())};
    case Branch::recycle:
      if (n.index() == 0 || m.index() == 0) {
        throw DegenerateRecycle(n, m);
      }
      return Recyclable{WSize(n.index() - 1), WSize(m.index() - 1)};
    case Branch::failure:
      break;
  }
  return Failure{};
}

Branch branch_for_uniform(WSize n, WSize m, double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::invalid_argument("uniform variate must lie in [0, 1)");
  }
  const OutcomeCounts c = outcome_counts(n, m);
  // Exact comparison u < num/den  <=>  u * den < num, done in rationals.
  const Rational scaled = Rational(u) * BigInt(std::to_string(c.denominator));
  if (scaled < BigInt(std::to_string(c.success))) {
    return Branch::success;
  }
  if (scaled < BigInt(std::to_string(c.success + c.recycle))) {
    return Branch::recycle;
  }
  return Branch::failure;
}

Branch branch_for_bits(WSize n, WSize m, std::uint64_t bits53) {
  const OutcomeCounts c = outcome_counts(n, m);
  // bits/2^53 < num/den  <=>  bits*den < num*2^53; fits in 128 bits for any
  // index below 2^20.
  using u128 = unsigned __int128;
  const u128 lhs = static_cast<u128>(bits53) * c.denominator;
  if (lhs < (static_cast<u128>(c.success) << 53)) {
    return Branch::success;
  }
  if (lhs < (static_cast<u128>(c.success + c.recycle) << 53)) {
    return Branch::recycle;
  }
  return Branch::failure;
}

FusionOutcome outcome_for_uniform(WSize n, WSize m, double u) {
  return apply_outcome(n, m, branch_for_uniform(n, m, u));
}

Branch sample_branch(WSize n, WSize m, RandomStream& rng) {
  constexpr std::uint32_t kMaxIndex = 1u << 20;
  if (n.index() >= kMaxIndex || m.index() >= kMaxIndex) {
    throw std::out_of_range("state index too large for exact sampling");
  }
  return branch_for_bits(n, m, rng.next_bits53());
}

FusionOutcome sample_outcome(WSize n, WSize m, RandomStream& rng) {
  return apply_outcome(n, m, sample_branch(n, m, rng));
}

}  // namespace wfuse
