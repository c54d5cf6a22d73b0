#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "multiswap/layout.hpp"
#include "multiswap/multiswap.hpp"
#include "multiswap/permutation.hpp"
#include "multiswap/simulator.hpp"
#include "multiswap/state.hpp"

namespace multiswap {

// Outcome bitstring -> count, over a declared bit order (ancillas first, then
// slot bits). Adding an existing key sums the counts.
class CountsTable {
 public:
  CountsTable() = default;
  explicit CountsTable(std::vector<std::string> labels);

  std::span<const std::string> labels() const { return labels_; }
  const std::map<std::string, std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const { return total_; }
  bool empty() const { return counts_.empty(); }

  // Throws DataError on a wrong length or a non-binary character.
  void add(std::string_view bits, std::uint64_t count);
  void merge(const CountsTable& other);

  std::optional<Scheme> scheme;
  std::optional<SwapTestVariant> final_variant;

  friend bool operator==(const CountsTable&, const CountsTable&) = default;

 private:
  std::vector<std::string> labels_;
  std::map<std::string, std::uint64_t> counts_;
  std::uint64_t total_ = 0;
};

struct EntryTally {
  SlotEntry entry;
  std::uint64_t t0 = 0;
  std::uint64_t t1 = 0;
};

// Verdict counts for one unordered pair, pooled over every (outcome, slot)
// that tests it.
struct TallyRecord {
  LabelPair pair;
  std::uint64_t t0 = 0;
  std::uint64_t t1 = 0;
  std::vector<EntryTally> entries;

  std::uint64_t samples() const { return t0 + t1; }
};

// One record per real pair, in pair order. Throws DataError if the counts'
// labels differ from the layout's bit labels.
std::vector<TallyRecord> tally(const CountsTable& counts, const PermutationTable& table,
                               const SchemeLayout& layout);

struct OverlapEstimate {
  LabelPair pair;
  double exact = 0.0;
  std::optional<double> estimate;  // empty when the pair was never sampled
  std::uint64_t samples = 0;
  std::optional<double> stderr_bound;  // 1 / sqrt(samples)

  bool sampled() const { return estimate.has_value(); }
};

// 2 t0 / (t0 + t1) - 1 with a 1/sqrt(m) error bound; "unsampled" when m = 0.
OverlapEstimate estimate(const TallyRecord& record, double exact = 0.0);

std::vector<OverlapEstimate> estimate_all(const std::vector<TallyRecord>& records,
                                          const StateEnsemble& ensemble);

enum class Engine { Statevector, Oracle, Auto };

std::string_view engine_name(Engine e);
Engine parse_engine(std::string_view name);

struct ExperimentConfig {
  Scheme scheme = Scheme::New;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 1;
  SwapTestVariant final_variant = SwapTestVariant::Standard;
  Engine engine = Engine::Auto;
  std::size_t qubit_cap = kDefaultQubitCap;
  unsigned workers = 0;
};

// Shared preparation: padding, circuit and decoder.
struct PreparedScheme {
  PaddedEnsemble padded;
  BuiltScheme built;
  PermutationTable table;
  CoverageMap coverage;
};

PreparedScheme prepare_scheme(const StateEnsemble& ensemble, Scheme scheme,
                              SwapTestVariant final_variant);

struct ExperimentResult {
  PreparedScheme prepared;
  Engine engine_used;
  CountsTable counts;
  std::vector<TallyRecord> tallies;
  std::vector<OverlapEstimate> estimates;
};

// Auto picks the statevector engine iff the circuit fits under the qubit cap.
// Throws ConfigError for zero shots or a forced statevector run over the cap.
ExperimentResult run_experiment(const StateEnsemble& ensemble, const ExperimentConfig& config);

// Classical sampler: ancilla outcome uniform, then each slot an independent
// swap test on the pair the table routes there.
CountsTable oracle_sample(const PreparedScheme& prepared, std::uint64_t shots, std::uint64_t seed,
                          unsigned workers = 0);

// Exact distributions over layout.bit_labels from the oracle product form and
// from the full circuit respectively.
MeasuredDistribution oracle_distribution(const PreparedScheme& prepared);
MeasuredDistribution circuit_distribution(const PreparedScheme& prepared,
                                          std::size_t qubit_cap = kDefaultQubitCap);

// Sum of |p - q| / 2. Throws std::invalid_argument on mismatched labels.
double total_variation(const MeasuredDistribution& p, const MeasuredDistribution& q);

// Estimates from exact outcome probabilities instead of samples; `samples` is 0.
std::vector<OverlapEstimate> analytic_estimates(const PreparedScheme& prepared,
                                                const MeasuredDistribution& dist);

struct ReferenceValue {
  double exact = 0.0;
  std::optional<double> estimate;
};
using ReferenceTable = std::map<LabelPair, ReferenceValue>;

struct ReplayRow {
  OverlapEstimate estimate;
  std::optional<ReferenceValue> reference;
  std::optional<double> deviation;  // |replayed - reference estimate|
  bool flagged = false;
};

struct ReplayReport {
  std::uint64_t total_shots = 0;
  std::vector<TallyRecord> tallies;
  std::vector<ReplayRow> rows;
  std::size_t flagged_count() const;
};

// Re-derives estimates from recorded counts. Throws DataError on a layout or
// scheme mismatch, naming expected and found labels.
ReplayReport replay(const CountsTable& counts, const PreparedScheme& prepared,
                    const ReferenceTable& reference, double tolerance);

}  // namespace multiswap
