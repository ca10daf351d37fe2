#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "wfuse/table.h"

namespace wfuse::cli {

enum class Command { cost, simulate, verify_gate, figure4 };
enum class Strategy { linear, linear_recycled, optimal, exponential, similar_sizes };

Strategy parse_strategy(const std::string& name);
std::string to_string(Strategy s);

// Sizes given on the command line are actual photon counts N; the library
// works with n = N - 2.
struct RunConfig {
  Command command = Command::cost;
  Strategy strategy = Strategy::optimal;
  std::uint32_t target_n = 3;  // actual photon count
  std::uint32_t k = 0;
  std::uint32_t max_k = 6;
  std::uint64_t runs = 1000;
  std::optional<std::uint64_t> seed;
  std::uint32_t gate_n = 3;  // verify-gate sizes, actual photon counts
  std::uint32_t gate_m = 3;
  unsigned threads = 0;  // 0 = hardware concurrency
  OutputFormat format = OutputFormat::csv;
  std::optional<std::string> output_path;
  std::optional<std::string> dump_runs_path;
};

// Bad flag values; the front end maps this to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Table cmd_cost(const RunConfig& config);

struct SimulateOutput {
  Table summary;
  Table runs;  // one row per run, for --dump-runs
};
SimulateOutput cmd_simulate(const RunConfig& config);

struct VerifyOutput {
  Table report;
  bool passed = false;  // every abs_error below 1e-12
};
VerifyOutput cmd_verify_gate(const RunConfig& config);

Table cmd_figure4(const RunConfig& config);

}  // namespace wfuse::cli
