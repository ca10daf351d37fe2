#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "wfuse/strategy_sim.h"

namespace wfuse {

namespace {

// Transient states are machine configurations at which a fusion is due.
// Each fusion leads, after the deterministic walk of step 2, either to
// absorption or to another transient state with a known number of draws.
struct Transition {
  Rational probability;
  Rational draws;
  std::optional<std::size_t> next;  // none = absorbed
};

constexpr std::size_t kMaxStates = 20000;

// Solves A x = b exactly by Gauss-Jordan elimination with a nonzero pivot.
std::vector<Rational> solve(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) {
      ++pivot;
    }
    if (pivot == n) {
      throw std::runtime_error("singular Markov system");
    }
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    const Rational inv = 1 / a[col][col];
    for (std::size_t j = col; j < n; ++j) {
      a[col][j] *= inv;
    }
    b[col] *= inv;
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) {
        continue;
      }
      const Rational f = a[row][col];
      for (std::size_t j = col; j < n; ++j) {
        if (a[col][j] != 0) {
          a[row][j] -= f * a[col][j];
        }
      }
      b[row] -= f * b[col];
    }
  }
  return b;
}

}  // namespace

Rational exact_expected_cost(std::uint32_t k) {
  if (k > 2) {
    throw std::invalid_argument("exact_expected_cost supports k <= 2 only");
  }
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  std::vector<SimilarSizesMachine> states;
  std::vector<std::vector<Transition>> transitions;

  auto intern = [&](const SimilarSizesMachine& m) {
    auto [it, inserted] = index.try_emplace(m.signature(), states.size());
    if (inserted) {
      if (states.size() >= kMaxStates) {
        throw std::runtime_error("Markov state space exceeds the supported size");
      }
      states.push_back(m);
    }
    return it->second;
  };

  SimilarSizesMachine start(k);
  const Rational initial_draws = start.advance();
  intern(start);

  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto [n, m] = states[s].next_pair();
    const OutcomeDistribution d = outcome_distribution(n, m);
    std::vector<Transition> out;
    for (auto [branch, p] : {std::pair{Branch::success, d.p_success},
                             std::pair{Branch::recycle, d.p_recycle},
                             std::pair{Branch::failure, d.p_failure}}) {
      SimilarSizesMachine next = states[s];
      if (next.resolve(branch)) {
        out.push_back({p, 0, std::nullopt});
        continue;
      }
      const Rational draws = next.advance();
      out.push_back({p, draws, intern(next)});
    }
    transitions.push_back(std::move(out));
  }

  // E_s - sum_t p_{s,t} E_t = sum_t p_{s,t} draws_{s,t}
  const std::size_t n = states.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  std::vector<Rational> b(n);
  for (std::size_t s = 0; s < n; ++s) {
    a[s][s] += 1;
    for (const Transition& t : transitions[s]) {
      b[s] += t.probability * t.draws;
      if (t.next) {
        a[s][*t.next] -= t.probability;
      }
    }
  }
  const std::vector<Rational> expected = solve(std::move(a), std::move(b));
  return Rational(initial_draws + expected[0]);
}

}  // namespace wfuse
