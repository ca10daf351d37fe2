#include "commands.h"

#include <cmath>
#include <map>

#include "wfuse/analytic_costs.h"
#include "wfuse/gate_verifier.h"
#include "wfuse/optimal_dp.h"
#include "wfuse/strategy_sim.h"

namespace wfuse::cli {

namespace {

constexpr std::uint32_t kMaxCostTarget = 4096;
constexpr std::uint32_t kMaxGateSize = 12;
constexpr std::uint32_t kMaxFigureK = 8;
constexpr std::uint32_t kMaxSimulateK = 20;

bool is_power_of_two(std::uint32_t x) { return x != 0 && (x & (x - 1)) == 0; }

std::uint32_t log2_exact(std::uint32_t x) {
  std::uint32_t l = 0;
  while ((1u << l) < x) {
    ++l;
  }
  return l;
}

void append_exact(std::vector<Cell>& row, const Rational& q) {
  row.emplace_back(numerator_string(q));
  row.emplace_back(denominator_string(q));
  row.emplace_back(to_double(q));
}

void append_empty(std::vector<Cell>& row, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    row.emplace_back(std::monostate{});
  }
}

std::int64_t as_cell(std::uint64_t v) { return static_cast<std::int64_t>(v); }

std::uint64_t require_seed(const RunConfig& config) {
  if (!config.seed) {
    throw UsageError("--seed is required so that results can be reproduced");
  }
  return *config.seed;
}

}  // namespace

Strategy parse_strategy(const std::string& name) {
  static const std::map<std::string, Strategy> names{
      {"linear", Strategy::linear},
      {"linear-recycled", Strategy::linear_recycled},
      {"optimal", Strategy::optimal},
      {"exponential", Strategy::exponential},
      {"similar-sizes", Strategy::similar_sizes}};
  const auto it = names.find(name);
  if (it == names.end()) {
    throw UsageError("unknown strategy '" + name + "'");
  }
  return it->second;
}

std::string to_string(Strategy s) {
  switch (s) {
    case Strategy::linear:
      return "linear";
    case Strategy::linear_recycled:
      return "linear-recycled";
    case Strategy::optimal:
      return "optimal";
    case Strategy::exponential:
      return "exponential";
    case Strategy::similar_sizes:
      return "similar-sizes";
  }
  return "unknown";
}

Table cmd_cost(const RunConfig& config) {
  if (config.target_n < 3 || config.target_n > kMaxCostTarget) {
    throw UsageError("--target must be an actual photon count in [3, " +
                     std::to_string(kMaxCostTarget) + "]");
  }
  const std::uint32_t max_index = config.target_n - 2;
  Table table{{"N", "strategy", "cost_exact_num", "cost_exact_den", "cost_float"}, {}};
  auto emit = [&](std::uint32_t index, const Rational& cost) {
    std::vector<Cell> row{std::int64_t{index + 2}, to_string(config.strategy)};
    append_exact(row, cost);
    table.add_row(std::move(row));
  };

  switch (config.strategy) {
    case Strategy::linear:
      for (std::uint32_t n = 1; n <= max_index; ++n) {
        emit(n, w3_linear_cost(n));
      }
      break;
    case Strategy::linear_recycled: {
      const CostSeries series = linear_recycled_costs(std::max(2u, max_index));
      for (std::uint32_t n = 1; n <= max_index; ++n) {
        emit(n, series.at(n));
      }
      break;
    }
    case Strategy::optimal: {
      const CostTable dp = optimal_costs(max_index);
      for (std::uint32_t n = 1; n <= max_index; ++n) {
        emit(n, dp.cost(n));
      }
      break;
    }
    case Strategy::exponential:
      if (!is_power_of_two(max_index)) {
        throw UsageError("exponential strategy needs --target N with N - 2 a power of two");
      }
      for (std::uint32_t k = 0; k <= log2_exact(max_index); ++k) {
        emit(1u << k, exponential_cost(k));
      }
      break;
    case Strategy::similar_sizes:
      throw UsageError("similar-sizes has no closed form; use the simulate command");
  }
  return table;
}

SimulateOutput cmd_simulate(const RunConfig& config) {
  if (config.strategy != Strategy::similar_sizes) {
    throw UsageError("simulate supports --strategy similar-sizes only");
  }
  const std::uint64_t seed = require_seed(config);
  if (config.k > kMaxSimulateK) {
    throw UsageError("--k must be at most " + std::to_string(kMaxSimulateK));
  }
  if (config.runs < 1) {
    throw UsageError("--runs must be at least 1");
  }
  const BatchStats stats = simulate_batch(config.k, config.runs, seed, config.threads);

  SimulateOutput out;
  out.summary = Table{{"k", "nominal_N", "runs", "seed", "mean", "std", "stderr", "min", "max"}, {}};
  out.summary.add_row({std::int64_t{config.k}, as_cell((std::uint64_t{1} << config.k) + 3),
                       as_cell(stats.runs), std::to_string(seed), stats.mean, stats.sample_std,
                       stats.std_error, as_cell(stats.min), as_cell(stats.max)});

  out.runs = Table{{"run", "run_seed", "cost", "final_N", "fusion_attempts", "successes",
                    "recycles", "failures"},
                   {}};
  for (std::uint64_t i = 0; i < stats.results.size(); ++i) {
    const RunResult& r = stats.results[i];
    out.runs.add_row({as_cell(i), std::to_string(mix64(seed + i)), as_cell(r.cost),
                      std::int64_t{r.final_size.photons()}, as_cell(r.fusion_attempts),
                      as_cell(r.successes), as_cell(r.recycles), as_cell(r.failures)});
  }
  return out;
}

VerifyOutput cmd_verify_gate(const RunConfig& config) {
  for (std::uint32_t size : {config.gate_n, config.gate_m}) {
    if (size < 2 || size > kMaxGateSize) {
      throw UsageError("--n and --m must lie in [2, " + std::to_string(kMaxGateSize) + "]");
    }
  }
  const ProbabilityCheck check = verify_probabilities(config.gate_n, config.gate_m);
  const GateReport& report = check.report;
  const SparseState target = make_w_state(config.gate_n + config.gate_m - 2);

  VerifyOutput out;
  out.report = Table{{"N", "M", "branch", "analytic_num", "analytic_den", "analytic", "simulated",
                      "abs_error", "fidelity"},
                     {}};
  out.passed = true;
  auto emit = [&](const std::string& branch, const Rational& analytic, double simulated,
                  Cell fid) {
    std::vector<Cell> row{std::int64_t{config.gate_n}, std::int64_t{config.gate_m}, branch};
    append_exact(row, analytic);
    const double err = std::abs(simulated - to_double(analytic));
    out.passed = out.passed && err < kAmplitudeTolerance;
    row.emplace_back(simulated);
    row.emplace_back(err);
    row.push_back(std::move(fid));
    out.report.add_row(std::move(row));
  };

  emit("success", check.analytic.p_success, check.simulated_success, check.success_fidelity);
  emit("recycle", check.analytic.p_recycle, check.simulated_recycle, check.recycle_fidelity);
  emit("failure", check.analytic.p_failure, check.simulated_failure, check.failure_fidelity);
  const Rational quarter = check.analytic.p_success / 4;
  for (const std::string* key : {&kPatternDD, &kPatternDDbar, &kPatternDbarD, &kPatternDbarDbar}) {
    const auto state = report.corrected_states.find(*key);
    Cell fid = state == report.corrected_states.end() ? Cell{}
                                                      : Cell{fidelity(state->second, target)};
    emit(*key, quarter, report.detector_breakdown.at(*key), std::move(fid));
  }
  return out;
}

Table cmd_figure4(const RunConfig& config) {
  const std::uint64_t seed = require_seed(config);
  if (config.max_k > kMaxFigureK) {
    throw UsageError("--max-k must be at most " + std::to_string(kMaxFigureK));
  }
  if (config.runs < 1) {
    throw UsageError("--runs must be at least 1");
  }
  const std::uint32_t max_index = (1u << config.max_k) + 1;
  const CostSeries recycled = linear_recycled_costs(std::max(2u, max_index));
  const CostTable dp = optimal_costs(max_index);

  std::map<std::uint32_t, std::pair<std::uint32_t, BatchStats>> simulated;  // by index
  for (std::uint32_t k = 0; k <= config.max_k; ++k) {
    // Distinct master seeds per stage keep the stages independent.
    simulated.emplace((1u << k) + 1,
                      std::pair{k, simulate_batch(k, config.runs, mix64(seed) + k, config.threads)});
  }

  Table table{{"N",
               "linear_num", "linear_den", "linear",
               "linear_recycled_num", "linear_recycled_den", "linear_recycled",
               "optimal_num", "optimal_den", "optimal",
               "exponential_num", "exponential_den", "exponential",
               "similar_sizes_k", "similar_sizes_mean", "similar_sizes_stderr",
               "similar_sizes_mean_final_N"},
              {}};
  for (std::uint32_t n = 1; n <= max_index; ++n) {
    std::vector<Cell> row{std::int64_t{n + 2}};
    append_exact(row, w3_linear_cost(n));
    append_exact(row, recycled.at(n));
    append_exact(row, dp.cost(n));
    if (is_power_of_two(n)) {
      append_exact(row, exponential_cost(log2_exact(n)));
    } else {
      append_empty(row, 3);
    }
    if (const auto it = simulated.find(n); it != simulated.end()) {
      const auto& [k, stats] = it->second;
      std::uint64_t final_sum = 0;
      for (const RunResult& r : stats.results) {
        final_sum += r.final_size.photons();
      }
      row.emplace_back(std::int64_t{k});
      row.emplace_back(stats.mean);
      row.emplace_back(stats.std_error);
      row.emplace_back(static_cast<double>(final_sum) / static_cast<double>(stats.runs));
    } else {
      append_empty(row, 4);
    }
    table.add_row(std::move(row));
  }
  return table;
}

}  // namespace wfuse::cli
