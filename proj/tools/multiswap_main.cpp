#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "multiswap/commands.hpp"
#include "multiswap/errors.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitData = 3;

}  // namespace

int main(int argc, char** argv) {
  using namespace multiswap;

  CLI::App app{"Multi-state swap test: build, simulate, estimate and replay overlap circuits"};
  app.require_subcommand(1);

  std::string scheme = "new";
  std::string final_test = "standard";
  std::string engine = "auto";
  bool normalize = false;

  BuildOptions build;
  std::string qasm;
  bool decompose = false;
  auto* build_cmd = app.add_subcommand("build", "Construct the circuit and print its resources");
  build_cmd->add_option("states", build.states, "State file (JSON)")->required()->check(CLI::ExistingFile);
  build_cmd->add_option("--scheme", scheme, "new or san")->capture_default_str();
  build_cmd->add_option("--final", final_test, "Final swap test: standard, ccz, deferred, destructive")
      ->capture_default_str();
  build_cmd->add_option("--qasm", qasm, "Write OpenQASM 2.0 to this file");
  build_cmd->add_flag("--decompose-cswap", decompose, "Emit CSWAP as cx/ccx/cx instead of cswap");
  build_cmd->add_flag("--prepare", build.prepare_states, "Emit u3 state preparation (width 1 only)");
  build_cmd->add_flag("--normalize", normalize, "Rescale input states to unit norm");

  EstimateOptions est;
  std::string est_out = ".";
  auto* est_cmd = app.add_subcommand("estimate", "Sample the circuit and estimate all pairwise overlaps");
  est_cmd->add_option("states", est.states, "State file (JSON)")->required()->check(CLI::ExistingFile);
  est_cmd->add_option("--scheme", scheme, "new or san")->capture_default_str();
  est_cmd->add_option("--shots", est.config.shots, "Number of shots")->capture_default_str();
  est_cmd->add_option("--seed", est.config.seed, "RNG seed")->capture_default_str();
  est_cmd->add_option("--engine", engine, "statevector, oracle or auto")->capture_default_str();
  est_cmd->add_option("--final", final_test, "Final swap test variant")->capture_default_str();
  est_cmd->add_option("--qubit-cap", est.config.qubit_cap, "Statevector qubit cap")->capture_default_str();
  est_cmd->add_option("--workers", est.config.workers, "Sampling threads (0 = auto)")->capture_default_str();
  est_cmd->add_option("--out-dir", est_out, "Output directory")->capture_default_str();
  est_cmd->add_flag("--normalize", normalize, "Rescale input states to unit norm");

  ReplayOptions rep;
  std::string rep_ref, rep_out;
  auto* rep_cmd = app.add_subcommand("replay", "Re-derive estimates from a recorded counts file");
  rep_cmd->add_option("counts", rep.counts, "Counts file")->required()->check(CLI::ExistingFile);
  rep_cmd->add_option("states", rep.states, "State file (JSON)")->required()->check(CLI::ExistingFile);
  rep_cmd->add_option("--reference", rep_ref, "Reference CSV (pair_i,pair_j,exact,estimate)");
  rep_cmd->add_option("--tolerance", rep.tolerance, "Flag |estimate - reference| above this")
      ->capture_default_str();
  rep_cmd->add_option("--out-dir", rep_out, "Write replay.csv and estimates.csv here");
  rep_cmd->add_flag("--normalize", normalize, "Rescale input states to unit norm");

  AnalyzeOptions ana;
  std::string ana_out = ".";
  auto* ana_cmd = app.add_subcommand("analyze", "Resource and precision tables");
  ana_cmd->add_option("--max-k", ana.max_k, "Largest n = 2^k")->capture_default_str();
  ana_cmd->add_option("--shots", ana.shots, "N for the precision model")->capture_default_str();
  ana_cmd->add_option("--out-dir", ana_out, "Output directory")->capture_default_str();

  ExportTableOptions exp;
  std::string exp_ref, exp_out;
  auto* exp_cmd = app.add_subcommand("export-table", "Permutation table, coverage and audit as JSON");
  exp_cmd->add_option("--n", exp.n, "Register count (power of two >= 4)")->capture_default_str();
  exp_cmd->add_option("--scheme", scheme, "new or san")->capture_default_str();
  exp_cmd->add_option("--reference", exp_ref, "Reference swap tables (JSON) to audit against");
  exp_cmd->add_option("--out", exp_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    const Scheme parsed_scheme = parse_scheme(scheme);
    const SwapTestVariant parsed_final = parse_variant(final_test);
    if (*build_cmd) {
      build.scheme = parsed_scheme;
      build.final_variant = parsed_final;
      build.normalize = normalize;
      build.cswap = decompose ? CswapStyle::Decomposed : CswapStyle::Native;
      if (!qasm.empty()) build.qasm = qasm;
      cmd_build(build, std::cout);
    } else if (*est_cmd) {
      est.config.scheme = parsed_scheme;
      est.config.final_variant = parsed_final;
      est.config.engine = parse_engine(engine);
      est.normalize = normalize;
      est.out_dir = est_out;
      cmd_estimate(est, std::cout);
    } else if (*rep_cmd) {
      rep.normalize = normalize;
      if (!rep_ref.empty()) rep.reference = rep_ref;
      if (!rep_out.empty()) rep.out_dir = rep_out;
      cmd_replay(rep, std::cout);
    } else if (*ana_cmd) {
      ana.out_dir = ana_out;
      cmd_analyze(ana, std::cout);
    } else if (*exp_cmd) {
      exp.scheme = parsed_scheme;
      if (!exp_ref.empty()) exp.reference = exp_ref;
      if (!exp_out.empty()) exp.out = exp_out;
      cmd_export_table(exp, std::cout);
    }
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
