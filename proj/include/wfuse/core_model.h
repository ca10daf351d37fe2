#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>

#include "wfuse/rational.h"

namespace wfuse {

class RandomStream;

// Size of a W state in the shifted index used for cost bookkeeping:
// w_n is the (n+2)-photon W state, so fusion successes add indices.
// Index 0 is a Bell pair.
class WSize {
 public:
  constexpr WSize() = default;
  constexpr explicit WSize(std::uint32_t index) : index_(index) {}

  static WSize from_photons(std::uint32_t photons);

  constexpr std::uint32_t index() const { return index_; }
  constexpr std::uint32_t photons() const { return index_ + 2; }
  constexpr bool is_bell_pair() const { return index_ == 0; }

  friend constexpr auto operator<=>(WSize, WSize) = default;

 private:
  std::uint32_t index_ = 0;
};

std::string to_string(WSize s);

struct OutcomeDistribution {
  Rational p_success;
  Rational p_recycle;
  Rational p_failure;

  bool operator==(const OutcomeDistribution&) const = default;
};

enum class Branch { success, recycle, failure };

std::string to_string(Branch b);

struct Success {
  WSize result;
  bool operator==(const Success&) const = default;
};

// Both inputs survive, each one photon shorter. A part of index 0 is a Bell
// pair; callers decide whether to keep it (strategies here discard it).
struct Recyclable {
  WSize left;
  WSize right;
  bool operator==(const Recyclable&) const = default;
};

struct Failure {
  bool operator==(const Failure&) const = default;
};

using FusionOutcome = std::variant<Success, Recyclable, Failure>;

// Raised when a recycle would shorten a Bell pair below two photons.
class DegenerateRecycle : public std::domain_error {
 public:
  DegenerateRecycle(WSize n, WSize m);
};

OutcomeDistribution outcome_distribution(WSize n, WSize m);

FusionOutcome apply_outcome(WSize n, WSize m, Branch branch);

// Branch selected by a uniform variate u in [0, 1). Thresholds are compared
// exactly in the fixed order success, recycle, failure:
//   u < P_s -> success, u < P_s + P_r -> recycle, otherwise failure.
Branch branch_for_uniform(WSize n, WSize m, double u);

// Same rule for a 53-bit integer draw (u = bits / 2^53). This is the path the
// Monte Carlo code uses; it is exact and agrees with branch_for_uniform.
Branch branch_for_bits(WSize n, WSize m, std::uint64_t bits53);

FusionOutcome outcome_for_uniform(WSize n, WSize m, double u);

// Consumes exactly one uniform variate from the stream.
FusionOutcome sample_outcome(WSize n, WSize m, RandomStream& rng);
Branch sample_branch(WSize n, WSize m, RandomStream& rng);

}  // namespace wfuse
