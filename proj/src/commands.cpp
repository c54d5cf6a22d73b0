#include "multiswap/commands.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "multiswap/analytics.hpp"
#include "multiswap/errors.hpp"
#include "multiswap/multiswap.hpp"

namespace multiswap {

namespace {

std::string fixed(double v, int digits = 4) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

template <typename Writer>
void write_with(const std::filesystem::path& path, Writer&& writer) {
  std::ostringstream ss;
  writer(ss);
  write_text_file(path, ss.str());
}

}  // namespace

void cmd_build(const BuildOptions& options, std::ostream& out) {
  const auto ensemble = load_states(options.states, options.normalize);
  const auto padded = pad_inputs(ensemble);
  const auto built = build_scheme(options.scheme, padded.size(), ensemble.width(),
                                  options.final_variant, padded.original_count);
  const auto& layout = built.layout;
  const auto network = count_resources(built.network);
  const auto full = count_resources(built.circuit);

  out << ensemble.size() << " inputs, " << network.ancilla_count << " ancillas, "
      << network.cswap_count << " CSWAPs (+" << layout.slots.size() << " final tests)\n";
  if (padded.size() != ensemble.size()) {
    out << "padded to " << padded.size() << " registers with " << padded.size() - ensemble.size()
        << " |0> states\n";
  }
  out << "scheme " << scheme_name(layout.scheme) << ", final test "
      << variant_name(layout.final_variant) << ", register width " << layout.width << "\n";
  out << "qubits " << full.qubit_count << ", gates " << full.gate_count_total
      << ", CSWAPs including final tests " << full.cswap_count << "\n";
  out << "measured bits:";
  for (const auto& l : layout.bit_labels) out << ' ' << l;
  out << "\n";

  if (options.qasm) {
    QasmOptions q;
    q.cswap = options.cswap;
    if (options.prepare_states) {
      q.prepare = &padded.ensemble;
      q.layout = &layout;
    }
    write_with(*options.qasm, [&](std::ostream& os) { write_qasm(os, built.circuit, q); });
    out << "wrote " << options.qasm->string() << "\n";
  }
}

ExperimentResult cmd_estimate(const EstimateOptions& options, std::ostream& out) {
  if (options.config.shots == 0) throw ConfigError("--shots must be at least 1");
  const auto ensemble = load_states(options.states, options.normalize);
  auto result = run_experiment(ensemble, options.config);
  const auto scatter = scatter_data(result.estimates);

  const auto dir = options.out_dir;
  write_with(dir / "estimates.csv", [&](std::ostream& os) { write_estimates_csv(os, result.estimates); });
  write_with(dir / "scatter.csv", [&](std::ostream& os) { write_scatter_csv(os, scatter); });
  write_with(dir / "counts.txt", [&](std::ostream& os) { write_counts(os, result.counts); });

  const auto& layout = result.prepared.built.layout;
  out << "scheme " << scheme_name(layout.scheme) << ", " << layout.n << " registers, "
      << layout.qubit_count() << " qubits, engine " << engine_name(result.engine_used) << "\n";
  out << options.config.shots << " shots, seed " << options.config.seed << ", "
      << result.estimates.size() << " pair estimates";
  if (scatter.unsampled > 0) out << " (" << scatter.unsampled << " unsampled)";
  out << "\n";
  out << "max |estimate - exact| " << fixed(scatter.max_abs_error) << ", rmse "
      << fixed(scatter.rmse) << "\n";
  out << "wrote estimates.csv, scatter.csv, counts.txt to " << dir.string() << "\n";
  return result;
}

ReplayReport cmd_replay(const ReplayOptions& options, std::ostream& out) {
  const auto counts = load_counts(options.counts);
  const auto ensemble = load_states(options.states, options.normalize);
  const auto prepared =
      prepare_scheme(ensemble, counts.scheme.value_or(Scheme::New),
                     counts.final_variant.value_or(SwapTestVariant::Standard));
  ReferenceTable reference;
  if (options.reference) reference = load_reference(*options.reference);
  auto report = replay(counts, prepared, reference, options.tolerance);

  out << "replayed " << report.total_shots << " shots over " << counts.counts().size()
      << " distinct outcomes, " << report.rows.size() << " pairs\n";
  out << "pair   exact   estimate  m     ref_est  flag\n";
  for (const auto& row : report.rows) {
    const auto& e = row.estimate;
    char line[128];
    std::snprintf(line, sizeof line, "(%zu,%zu)  %.4f  %8s  %-5llu %7s  %s\n", e.pair.first,
                  e.pair.second, e.exact, e.estimate ? fixed(*e.estimate).c_str() : "unsampled",
                  static_cast<unsigned long long>(e.samples),
                  row.reference && row.reference->estimate
                      ? fixed(*row.reference->estimate).c_str()
                      : "-",
                  row.flagged ? "FLAG" : "");
    out << line;
  }
  out << report.flagged_count() << " pairs flagged (tolerance " << fixed(options.tolerance) << ")\n";
  if (options.out_dir) {
    write_with(*options.out_dir / "replay.csv", [&](std::ostream& os) { write_replay_csv(os, report); });
    write_with(*options.out_dir / "estimates.csv", [&](std::ostream& os) {
      std::vector<OverlapEstimate> est;
      for (const auto& r : report.rows) est.push_back(r.estimate);
      write_estimates_csv(os, est);
    });
    out << "wrote replay.csv, estimates.csv to " << options.out_dir->string() << "\n";
  }
  return report;
}

void cmd_analyze(const AnalyzeOptions& options, std::ostream& out) {
  if (options.max_k < 2) throw ConfigError("--max-k must be at least 2");
  if (options.shots == 0) throw ConfigError("--shots must be at least 1");
  const auto rows = resource_report(options.max_k);
  std::vector<PrecisionModel> precision_rows;
  for (std::size_t n = 2; n <= (std::size_t{1} << options.max_k); ++n) {
    precision_rows.push_back(precision(n, options.shots));
  }
  write_with(options.out_dir / "resources.csv", [&](std::ostream& os) { write_resources_csv(os, rows); });
  write_with(options.out_dir / "precision.csv",
             [&](std::ostream& os) { write_precision_csv(os, precision_rows); });

  out << "n     new(cswap,anc)  san(cswap,anc)  printed nk  printed 3(n-1)  mismatch\n";
  for (const auto& r : rows) {
    char line[128];
    std::snprintf(line, sizeof line, "%-5zu %6zu,%-8zu %6zu,%-8zu %8zu  %12zu  %s\n", r.n,
                  r.new_cswap, r.new_ancilla, r.san_cswap, r.san_ancilla, r.printed_new_cswap,
                  r.printed_san_cswap, r.printed_formula_mismatch ? "printed_formula_mismatch" : "");
    out << line;
  }
  out << "wrote resources.csv, precision.csv to " << options.out_dir.string() << "\n";
}

void cmd_export_table(const ExportTableOptions& options, std::ostream& out) {
  std::optional<BuiltScheme> built;
  std::optional<PermutationTable> table;
  try {
    built = build_scheme(options.scheme, options.n, 1, SwapTestVariant::Standard, options.n);
    table = derive_permutation_table(*built);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("--n: ") + e.what());
  }
  std::vector<ReferenceSwapTable> references;
  if (options.reference) references = load_reference_tables(*options.reference);
  const auto text = permutation_table_json(*built, *table, references);
  if (options.out) {
    write_text_file(*options.out, text);
    out << "wrote " << options.out->string() << " (" << table->row_count() << " outcomes)\n";
  } else {
    out << text;
  }
}

}  // namespace multiswap
