#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <functional>
#include <utility>
#include <vector>

#include "wfuse/core_model.h"
#include "wfuse/random.h"
#include "wfuse/rational.h"

namespace wfuse {

// Size-index bookkeeping for one run. Every w_1 drawn adds 1; a success
// conserves the sum, a recycle removes 2, a failure removes both operands.
struct SizeLedger {
  std::uint64_t drawn = 0;
  std::uint64_t held = 0;              // still in the sets (or the final state)
  std::uint64_t lost_to_failure = 0;
  std::uint64_t lost_to_recycle = 0;
  std::uint64_t bell_pairs_discarded = 0;

  bool balanced() const { return drawn == held + lost_to_failure + lost_to_recycle; }
};

struct RunResult {
  std::uint64_t cost = 0;  // number of w_1 consumed
  WSize final_size;
  std::uint64_t fusion_attempts = 0;
  std::uint64_t successes = 0;
  std::uint64_t recycles = 0;
  std::uint64_t failures = 0;
  SizeLedger ledger;
};

// State of the similar-sizes strategy. Set S_l holds states w_m with
// 2^{l-1} < m <= 2^l (S_0 holds only w_1); states are fused only within a
// set, and a success in S_k ends the run with a state larger than w_{2^k}.
//
// Sets may transiently hold more than two states after recycled parts are
// reinserted; any set with two or more is due for fusion, and the two
// earliest inserted states are paired.
class SimilarSizesMachine {
 public:
  explicit SimilarSizesMachine(std::uint32_t k);

  // Smallest l with m <= 2^l.
  static std::uint32_t level_of(WSize m);

  // Walks the pointer down, drawing w_1 into S_0 as needed, until the
  // current set holds two states. Returns the number of w_1 drawn.
  std::uint64_t advance();

  // The pair that resolve() will fuse.
  std::pair<WSize, WSize> next_pair() const;

  // Fuses next_pair() with the given outcome. Returns true once the run ends.
  bool resolve(Branch branch);

  bool finished() const { return finished_; }
  std::uint32_t target_level() const { return k_; }
  std::uint32_t pointer() const { return pointer_; }
  std::uint64_t cost() const { return result_.cost; }
  const std::vector<std::deque<WSize>>& sets() const { return sets_; }
  const RunResult& result() const { return result_; }

  // Pointer plus set contents in order; identifies a configuration up to
  // the accumulated counters.
  std::vector<std::uint32_t> signature() const;

 private:
  void insert(WSize state, std::uint32_t expected_level_lo, std::uint32_t expected_level_hi);

  std::uint32_t k_;
  std::uint32_t pointer_ = 0;
  std::vector<std::deque<WSize>> sets_;
  bool finished_ = false;
  RunResult result_;
};

inline constexpr std::uint64_t kStepBudget = 1'000'000'000;

RunResult run_similar_sizes(std::uint32_t k, RandomStream& rng);

// Linear growth by w_1 up to w_target. Without recycling any non-success
// restarts the chain from a fresh w_1. With recycling a recyclable outcome
// keeps the shortened chain w_{m-1} (its w_0 companion is discarded); a
// chain shortened to w_0 restarts.
RunResult run_linear_strategy(WSize target, bool recycle, RandomStream& rng);

struct BatchStats {
  std::uint64_t runs = 0;
  double mean = 0.0;
  double sample_std = 0.0;
  double std_error = 0.0;
  std::uint64_t min = 0;
  std::uint64_t max = 0;
  std::vector<RunResult> results;  // in run order
};

BatchStats summarize(std::vector<RunResult> results);

// Executes `runs` independent runs; run i draws from
// RandomStream::for_run(master_seed, i). threads == 0 uses the hardware
// concurrency. Results do not depend on the thread count.
BatchStats run_batch(std::uint64_t runs, std::uint64_t master_seed, unsigned threads,
                     const std::function<RunResult(RandomStream&)>& run);

BatchStats simulate_batch(std::uint32_t k, std::uint64_t runs, std::uint64_t master_seed,
                          unsigned threads = 1);

// Exact expected cost of the similar-sizes strategy, from the absorbing
// Markov chain over machine configurations. Only k <= 2 is supported.
Rational exact_expected_cost(std::uint32_t k);

}  // namespace wfuse
