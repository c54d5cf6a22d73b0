#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>

#include "multiswap/estimation.hpp"
#include "multiswap/io.hpp"

namespace multiswap {

// Subcommand bodies behind the CLI. Each prints a human summary to `out` and
// throws ConfigError / DataError for the caller to map to exit codes.

struct BuildOptions {
  std::filesystem::path states;
  Scheme scheme = Scheme::New;
  SwapTestVariant final_variant = SwapTestVariant::Standard;
  bool normalize = false;
  std::optional<std::filesystem::path> qasm;
  CswapStyle cswap = CswapStyle::Native;
  bool prepare_states = false;
};

void cmd_build(const BuildOptions& options, std::ostream& out);

struct EstimateOptions {
  std::filesystem::path states;
  ExperimentConfig config;
  bool normalize = false;
  std::filesystem::path out_dir = ".";
};

ExperimentResult cmd_estimate(const EstimateOptions& options, std::ostream& out);

struct ReplayOptions {
  std::filesystem::path counts;
  std::filesystem::path states;
  std::optional<std::filesystem::path> reference;
  double tolerance = 0.005;
  bool normalize = false;
  std::optional<std::filesystem::path> out_dir;
};

ReplayReport cmd_replay(const ReplayOptions& options, std::ostream& out);

struct AnalyzeOptions {
  std::size_t max_k = 5;
  std::uint64_t shots = 8192;
  std::filesystem::path out_dir = ".";
};

void cmd_analyze(const AnalyzeOptions& options, std::ostream& out);

struct ExportTableOptions {
  std::size_t n = 8;
  Scheme scheme = Scheme::New;
  std::optional<std::filesystem::path> reference;
  std::optional<std::filesystem::path> out;  // stdout when unset
};

void cmd_export_table(const ExportTableOptions& options, std::ostream& out);

}  // namespace multiswap
