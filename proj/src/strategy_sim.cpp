#include "wfuse/strategy_sim.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace wfuse {

SimilarSizesMachine::SimilarSizesMachine(std::uint32_t k) : k_(k), sets_(k + 2) {
  if (k > 20) {
    throw std::invalid_argument("similar-sizes target level must be <= 20");
  }
}

std::uint32_t SimilarSizesMachine::level_of(WSize m) {
  if (m.index() == 0) {
    throw std::invalid_argument("w_0 belongs to no set");
  }
  std::uint32_t level = 0;
  while ((std::uint64_t{1} << level) < m.index()) {
    ++level;
  }
  return level;
}

void SimilarSizesMachine::insert(WSize state, std::uint32_t expected_level_lo,
                                 std::uint32_t expected_level_hi) {
  const std::uint32_t level = level_of(state);
  if (level < expected_level_lo || level > expected_level_hi || level >= sets_.size()) {
    throw std::logic_error("set membership violated: " + to_string(state) + " in S_" +
                           std::to_string(level));
  }
  sets_[level].push_back(state);
}

std::uint64_t SimilarSizesMachine::advance() {
  if (finished_) {
    throw std::logic_error("advance() on a finished run");
  }
  std::uint64_t drawn = 0;
  while (sets_[pointer_].size() < 2) {
    if (pointer_ == 0) {
      insert(WSize(1), 0, 0);
      ++drawn;
    } else {
      --pointer_;
    }
  }
  result_.cost += drawn;
  result_.ledger.drawn += drawn;
  return drawn;
}

std::pair<WSize, WSize> SimilarSizesMachine::next_pair() const {
  const auto& set = sets_[pointer_];
  if (set.size() < 2) {
    throw std::logic_error("current set holds fewer than two states");
  }
  return {set[0], set[1]};
}

bool SimilarSizesMachine::resolve(Branch branch) {
  const auto [n, m] = next_pair();
  auto& set = sets_[pointer_];
  set.pop_front();
  set.pop_front();
  ++result_.fusion_attempts;

  const FusionOutcome outcome = apply_outcome(n, m, branch);
  if (const auto* s = std::get_if<Success>(&outcome)) {
    ++result_.successes;
    if (pointer_ == k_) {
      finished_ = true;
      result_.final_size = s->result;
    } else {
      insert(s->result, pointer_ + 1, pointer_ + 1);
      ++pointer_;
    }
  } else if (const auto* r = std::get_if<Recyclable>(&outcome)) {
    ++result_.recycles;
    result_.ledger.lost_to_recycle += 2;
    const std::uint32_t lo = pointer_ == 0 ? 0 : pointer_ - 1;
    for (WSize part : {r->left, r->right}) {
      if (part.is_bell_pair()) {
        ++result_.ledger.bell_pairs_discarded;
      } else {
        insert(part, lo, pointer_);
      }
    }
  } else {
    ++result_.failures;
    result_.ledger.lost_to_failure += n.index() + m.index();
  }

  std::uint64_t held = finished_ ? result_.final_size.index() : 0;
  for (const auto& s : sets_) {
    for (WSize w : s) {
      held += w.index();
    }
  }
  result_.ledger.held = held;
  return finished_;
}

std::vector<std::uint32_t> SimilarSizesMachine::signature() const {
  std::vector<std::uint32_t> sig{pointer_};
  for (const auto& s : sets_) {
    sig.push_back(static_cast<std::uint32_t>(s.size()));
    for (WSize w : s) {
      sig.push_back(w.index());
    }
  }
  return sig;
}

RunResult run_similar_sizes(std::uint32_t k, RandomStream& rng) {
  SimilarSizesMachine machine(k);
  std::uint64_t steps = 0;
  while (true) {
    steps += machine.advance() + 1;
    if (steps > kStepBudget) {
      throw std::runtime_error("similar-sizes run exceeded the step budget");
    }
    const auto [n, m] = machine.next_pair();
    if (machine.resolve(sample_branch(n, m, rng))) {
      return machine.result();
    }
  }
}

RunResult run_linear_strategy(WSize target, bool recycle, RandomStream& rng) {
  if (target.index() < 1) {
    throw std::invalid_argument("linear strategy target must be w_1 or larger");
  }
  RunResult result;
  auto draw = [&result] {
    ++result.cost;
    ++result.ledger.drawn;
  };
  draw();
  WSize chain(1);
  std::uint64_t steps = 0;
  while (chain < target) {
    if (++steps > kStepBudget) {
      throw std::runtime_error("linear run exceeded the step budget");
    }
    draw();
    ++result.fusion_attempts;
    const Branch branch = sample_branch(chain, WSize(1), rng);
    if (branch == Branch::success) {
      ++result.successes;
      chain = WSize(chain.index() + 1);
      continue;
    }
    if (branch == Branch::recycle) {
      ++result.recycles;
      result.ledger.lost_to_recycle += 2;
      ++result.ledger.bell_pairs_discarded;  // the shortened w_1 companion
      if (recycle && chain.index() >= 2) {
        chain = WSize(chain.index() - 1);
        continue;
      }
      // Whatever is left of the chain is thrown away.
      if (chain.index() >= 2) {
        result.ledger.lost_to_failure += chain.index() - 1;
      } else {
        ++result.ledger.bell_pairs_discarded;
      }
    } else {
      ++result.failures;
      result.ledger.lost_to_failure += chain.index() + 1;
    }
    draw();
    chain = WSize(1);
  }
  result.final_size = chain;
  result.ledger.held = chain.index();
  return result;
}

BatchStats summarize(std::vector<RunResult> results) {
  if (results.empty()) {
    throw std::invalid_argument("cannot summarize an empty batch");
  }
  BatchStats stats;
  stats.runs = results.size();
  // Integer sums keep the statistics independent of aggregation order.
  unsigned __int128 sum = 0;
  unsigned __int128 sum_sq = 0;
  stats.min = std::numeric_limits<std::uint64_t>::max();
  for (const RunResult& r : results) {
    sum += r.cost;
    sum_sq += static_cast<unsigned __int128>(r.cost) * r.cost;
    stats.min = std::min(stats.min, r.cost);
    stats.max = std::max(stats.max, r.cost);
  }
  const auto n = static_cast<unsigned __int128>(stats.runs);
  stats.mean = static_cast<double>(sum) / static_cast<double>(stats.runs);
  if (stats.runs > 1) {
    const unsigned __int128 numer = n * sum_sq - sum * sum;
    const double var = static_cast<double>(numer) /
                       (static_cast<double>(stats.runs) * static_cast<double>(stats.runs - 1));
    stats.sample_std = std::sqrt(var);
    stats.std_error = stats.sample_std / std::sqrt(static_cast<double>(stats.runs));
  }
  stats.results = std::move(results);
  return stats;
}

BatchStats run_batch(std::uint64_t runs, std::uint64_t master_seed, unsigned threads,
                     const std::function<RunResult(RandomStream&)>& run) {
  if (runs < 1) {
    throw std::invalid_argument("a batch needs at least one run");
  }
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, runs));

  std::vector<RunResult> results(runs);
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](unsigned t) {
    try {
      for (std::uint64_t i = t; i < runs; i += threads) {
        RandomStream rng = RandomStream::for_run(master_seed, i);
        results[i] = run(rng);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) {
        error = std::current_exception();
      }
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back(worker, t);
    }
  }
  if (error) {
    std::rethrow_exception(error);
  }
  return summarize(std::move(results));
}

BatchStats simulate_batch(std::uint32_t k, std::uint64_t runs, std::uint64_t master_seed,
                          unsigned threads) {
  return run_batch(runs, master_seed, threads,
                   [k](RandomStream& rng) { return run_similar_sizes(k, rng); });
}

}  // namespace wfuse
