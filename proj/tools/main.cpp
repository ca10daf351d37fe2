// wfuse: cost tables, Monte Carlo runs and gate checks for W-state fusion.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "commands.h"

namespace {

using wfuse::OutputFormat;
using wfuse::cli::Command;
using wfuse::cli::RunConfig;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;

void add_output_flags(CLI::App& sub, RunConfig& config, std::string& format) {
  sub.add_option("--format", format, "Output encoding")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub.add_option("--out", config.output_path, "Output file (default: standard output)");
}

void emit(const std::string& text, const RunConfig& config) {
  if (!config.output_path) {
    std::cout << text;
    std::cout.flush();
    return;
  }
  std::ofstream file(*config.output_path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open " + *config.output_path);
  }
  file << text;
}

std::string render(const wfuse::Table& table, OutputFormat format) {
  std::ostringstream out;
  wfuse::write_table(table, format, out);
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"W-state fusion cost calculator and simulator"};
  app.require_subcommand(1);

  RunConfig config;
  std::string format = "csv";
  std::string strategy = "optimal";

  auto* cost = app.add_subcommand("cost", "Exact expected cost per size for a strategy");
  cost->add_option("--strategy", strategy, "linear | linear-recycled | optimal | exponential")
      ->capture_default_str();
  cost->add_option("--target", config.target_n, "Largest actual photon count N (>= 3)")
      ->required();
  add_output_flags(*cost, config, format);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo batch of the similar-sizes strategy");
  std::string sim_strategy = "similar-sizes";
  simulate->add_option("--strategy", sim_strategy, "similar-sizes")->capture_default_str();
  simulate->add_option("--k", config.k, "Target stage; final size exceeds w_{2^k}")->required();
  simulate->add_option("--runs", config.runs, "Number of runs")->capture_default_str();
  simulate->add_option("--seed", config.seed, "Master seed (required)");
  simulate->add_option("--threads", config.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  simulate->add_option("--dump-runs", config.dump_runs_path, "Also write per-run rows to PATH");
  add_output_flags(*simulate, config, format);

  auto* verify = app.add_subcommand("verify-gate", "Amplitude-level check of the fusion gate");
  verify->add_option("--n", config.gate_n, "Photons in the first W state")->required();
  verify->add_option("--m", config.gate_m, "Photons in the second W state")->required();
  add_output_flags(*verify, config, format);

  auto* figure = app.add_subcommand("figure4", "All cost curves plus Monte Carlo means");
  figure->add_option("--max-k", config.max_k, "Largest similar-sizes stage (<= 8)")
      ->capture_default_str();
  figure->add_option("--runs", config.runs, "Runs per stage")->capture_default_str();
  figure->add_option("--seed", config.seed, "Master seed (required)");
  figure->add_option("--threads", config.threads, "Worker threads (0 = all cores)")
      ->capture_default_str();
  add_output_flags(*figure, config, format);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  config.format = format == "json" ? OutputFormat::json : OutputFormat::csv;
  try {
    if (*cost) {
      config.command = Command::cost;
      config.strategy = wfuse::cli::parse_strategy(strategy);
      emit(render(wfuse::cli::cmd_cost(config), config.format), config);
    } else if (*simulate) {
      config.command = Command::simulate;
      config.strategy = wfuse::cli::parse_strategy(sim_strategy);
      const auto out = wfuse::cli::cmd_simulate(config);
      emit(render(out.summary, config.format), config);
      if (config.dump_runs_path) {
        RunConfig dump = config;
        dump.output_path = config.dump_runs_path;
        emit(render(out.runs, config.format), dump);
      }
    } else if (*verify) {
      config.command = Command::verify_gate;
      const auto out = wfuse::cli::cmd_verify_gate(config);
      emit(render(out.report, config.format), config);
      if (!out.passed) {
        std::cerr << "verify-gate: deviation above 1e-12\n";
        return kExitVerifyFailed;
      }
    } else if (*figure) {
      config.command = Command::figure4;
      emit(render(wfuse::cli::cmd_figure4(config), config.format), config);
    }
  } catch (const wfuse::cli::UsageError& e) {
    std::cerr << "wfuse: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "wfuse: " << e.what() << '\n';
    return kExitVerifyFailed;
  }
  return kExitOk;
}
