#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "multiswap/analytics.hpp"
#include "multiswap/circuit.hpp"
#include "multiswap/estimation.hpp"
#include "multiswap/permutation.hpp"
#include "multiswap/state.hpp"

namespace multiswap {

// {"width": w, "states": [[a0, a1, ...], ...]} where each amplitude is a number
// or [re, im]. Errors carry the JSON path of the offending field. With
// `normalize` set, any non-zero vector is rescaled; otherwise the norm must be
// within kNormAcceptTolerance of one.
StateEnsemble parse_states_json(std::string_view text, bool normalize = false);
StateEnsemble load_states(const std::filesystem::path& path, bool normalize = false);
std::string states_to_json(const StateEnsemble& ensemble);

// Counts text: '#' starts a comment; header lines `scheme: <name>`,
// `layout: <label> ...`, `final: <variant>`; data lines `<bits> <count>`.
// Duplicate bitstrings are summed. Errors carry the line number.
CountsTable parse_counts(std::istream& in);
CountsTable load_counts(const std::filesystem::path& path);
void write_counts(std::ostream& out, const CountsTable& counts);

// CSV with header pair_i,pair_j,exact,estimate; estimate may be empty.
ReferenceTable parse_reference_csv(std::istream& in);
ReferenceTable load_reference(const std::filesystem::path& path);

void write_estimates_csv(std::ostream& out, const std::vector<OverlapEstimate>& estimates);
void write_scatter_csv(std::ostream& out, const ScatterData& scatter);
void write_resources_csv(std::ostream& out, const std::vector<ResourceRow>& rows);
void write_precision_csv(std::ostream& out, const std::vector<PrecisionModel>& rows);
void write_replay_csv(std::ostream& out, const ReplayReport& report);

enum class CswapStyle { Native, Decomposed };

struct QasmOptions {
  CswapStyle cswap = CswapStyle::Native;
  // When set, width-1 registers are prepared with u3 from these states.
  const StateEnsemble* prepare = nullptr;
  const SchemeLayout* layout = nullptr;
};

// OpenQASM 2.0 with one quantum and one classical register. Classical bit j
// is the j-th declared measurement. CCZ is emitted as h . ccx . h; CSWAP as
// `cswap` or cx . ccx . cx.
void write_qasm(std::ostream& out, const Circuit& circuit, const QasmOptions& options = {});

// Reference swap tables as printed in the source (data/reference_tables.json).
struct ReferenceSwapTable {
  std::string name;
  Scheme scheme = Scheme::New;
  std::size_t n = 0;
  std::vector<std::pair<std::string, std::vector<std::size_t>>> rows;
};

std::vector<ReferenceSwapTable> parse_reference_tables(std::string_view text);
std::vector<ReferenceSwapTable> load_reference_tables(const std::filesystem::path& path);

// Table, slot pairs, coverage and (when a matching reference exists) a
// row-by-row audit against it.
std::string permutation_table_json(const BuiltScheme& built, const PermutationTable& table,
                                   const std::vector<ReferenceSwapTable>& references = {});

void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace multiswap
