#include "multiswap/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "multiswap/errors.hpp"
#include "multiswap/rng.hpp"
#include "multiswap/swap_test.hpp"

namespace multiswap {

namespace {

std::string join_labels(std::span<const std::string> labels) {
  std::string out;
  for (const auto& l : labels) {
    if (!out.empty()) out += ' ';
    out += l;
  }
  return out;
}

std::uint64_t parse_prefix(std::string_view bits, std::size_t count) {
  std::uint64_t v = 0;
  for (std::size_t i = 0; i < count; ++i) v = (v << 1) | static_cast<std::uint64_t>(bits[i] == '1');
  return v;
}

void require_layout(std::span<const std::string> found, const SchemeLayout& layout) {
  if (!std::equal(found.begin(), found.end(), layout.bit_labels.begin(), layout.bit_labels.end())) {
    throw DataError("counts layout mismatch: expected [" + join_labels(layout.bit_labels) +
                    "], found [" + join_labels(found) + "]");
  }
}

std::vector<LabelPair> real_pairs(std::size_t real_count) {
  std::vector<LabelPair> out;
  for (std::size_t i = 1; i <= real_count; ++i) {
    for (std::size_t j = i + 1; j <= real_count; ++j) out.emplace_back(i, j);
  }
  return out;
}

std::size_t draw_index(std::span<const double> cdf, double u) {
  const double target = u * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), target);
  if (it == cdf.end()) {
    --it;
    while (it != cdf.begin() && *it == *(it - 1)) --it;
  }
  return static_cast<std::size_t>(it - cdf.begin());
}

// Exact local distributions of one slot's measured bits, keyed by the ordered
// pair of labels the table routes to that slot.
class SlotModel {
 public:
  explicit SlotModel(const PreparedScheme& prepared) : prepared_(prepared) {
    const auto& layout = prepared.built.layout;
    bit_count_ = layout.slots.front().verdict.bit_count;
    for (std::uint64_t o = 0; o < prepared.table.row_count(); ++o) {
      for (std::size_t s = 0; s < layout.slots.size(); ++s) {
        const auto key = prepared.table.slot_pair(o, s);
        if (!models_.contains(key)) models_.emplace(key, compute(key));
      }
    }
  }

  std::size_t bit_count() const { return bit_count_; }

  struct Local {
    std::vector<double> probabilities;
    std::vector<double> cdf;
  };

  const Local& at(const std::pair<std::size_t, std::size_t>& key) const { return models_.at(key); }

 private:
  Local compute(const std::pair<std::size_t, std::size_t>& key) const {
    const auto& ensemble = prepared_.padded.ensemble;
    const auto& a = ensemble.at_label(key.first);
    const auto& b = ensemble.at_label(key.second);
    const auto variant = prepared_.built.layout.final_variant;
    Local local;
    if (variant == SwapTestVariant::Standard || variant == SwapTestVariant::Ccz) {
      const double p0 = (1.0 + exact_overlap(a, b)) / 2.0;
      local.probabilities = {p0, 1.0 - p0};
    } else {
      const auto test = build_swap_test(variant, ensemble.width());
      local.probabilities = exact_distribution(test.circuit, swap_test_input(test, a, b)).probabilities;
    }
    local.cdf.resize(local.probabilities.size());
    std::partial_sum(local.probabilities.begin(), local.probabilities.end(), local.cdf.begin());
    return local;
  }

  const PreparedScheme& prepared_;
  std::size_t bit_count_ = 1;
  std::map<std::pair<std::size_t, std::size_t>, Local> models_;
};

void write_bits(std::string& out, std::size_t offset, std::uint64_t value, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) {
    out[offset + i] = ((value >> (count - 1 - i)) & 1u) ? '1' : '0';
  }
}

}  // namespace

CountsTable::CountsTable(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw DataError("counts table needs at least one bit label");
}

void CountsTable::add(std::string_view bits, std::uint64_t count) {
  if (bits.size() != labels_.size()) {
    throw DataError("outcome '" + std::string(bits) + "' has " + std::to_string(bits.size()) +
                    " bits, layout declares " + std::to_string(labels_.size()));
  }
  if (bits.find_first_not_of("01") != std::string_view::npos) {
    throw DataError("outcome '" + std::string(bits) + "' is not a bitstring");
  }
  counts_[std::string(bits)] += count;
  total_ += count;
}

void CountsTable::merge(const CountsTable& other) {
  if (!std::equal(labels_.begin(), labels_.end(), other.labels_.begin(), other.labels_.end())) {
    throw DataError("cannot merge counts over different layouts");
  }
  for (const auto& [bits, c] : other.counts_) add(bits, c);
}

std::vector<TallyRecord> tally(const CountsTable& counts, const PermutationTable& table,
                               const SchemeLayout& layout) {
  require_layout(counts.labels(), layout);
  const std::size_t d = layout.ancilla_count();
  std::map<SlotEntry, std::pair<std::uint64_t, std::uint64_t>> per_entry;
  for (const auto& [bits, count] : counts.counts()) {
    const std::uint64_t outcome = parse_prefix(bits, d);
    for (std::size_t s = 0; s < layout.slots.size(); ++s) {
      const auto [a, b] = table.slot_pair(outcome, s);
      if (layout.is_padding(a) || layout.is_padding(b)) continue;
      auto& t = per_entry[{outcome, s}];
      (layout.slots[s].verdict.decode(bits) == 0 ? t.first : t.second) += count;
    }
  }

  std::vector<TallyRecord> records;
  std::map<LabelPair, std::size_t> index;
  for (const auto& p : real_pairs(layout.real_count)) {
    index[p] = records.size();
    records.push_back({p, 0, 0, {}});
  }
  for (const auto& [entry, t] : per_entry) {
    const auto [a, b] = table.slot_pair(entry.outcome, entry.slot);
    auto& rec = records[index.at(make_pair_key(a, b))];
    rec.t0 += t.first;
    rec.t1 += t.second;
    rec.entries.push_back({entry, t.first, t.second});
  }
  return records;
}

OverlapEstimate estimate(const TallyRecord& record, double exact) {
  OverlapEstimate e;
  e.pair = record.pair;
  e.exact = exact;
  e.samples = record.samples();
  if (e.samples > 0) {
    const double m = static_cast<double>(e.samples);
    e.estimate = 2.0 * static_cast<double>(record.t0) / m - 1.0;
    e.stderr_bound = 1.0 / std::sqrt(m);
  }
  return e;
}

std::vector<OverlapEstimate> estimate_all(const std::vector<TallyRecord>& records,
                                          const StateEnsemble& ensemble) {
  std::vector<OverlapEstimate> out;
  out.reserve(records.size());
  for (const auto& r : records) {
    out.push_back(estimate(r, exact_overlap(ensemble.at_label(r.pair.first),
                                            ensemble.at_label(r.pair.second))));
  }
  return out;
}

std::string_view engine_name(Engine e) {
  switch (e) {
    case Engine::Statevector: return "statevector";
    case Engine::Oracle: return "oracle";
    case Engine::Auto: return "auto";
  }
  return "?";
}

Engine parse_engine(std::string_view name) {
  if (name == "statevector") return Engine::Statevector;
  if (name == "oracle") return Engine::Oracle;
  if (name == "auto") return Engine::Auto;
  throw ConfigError("unknown engine '" + std::string(name) +
                    "' (expected statevector, oracle or auto)");
}

PreparedScheme prepare_scheme(const StateEnsemble& ensemble, Scheme scheme,
                              SwapTestVariant final_variant) {
  auto padded = pad_inputs(ensemble);
  auto built = build_scheme(scheme, padded.size(), padded.ensemble.width(), final_variant,
                            padded.original_count);
  auto table = derive_permutation_table(built);
  auto coverage = pair_coverage_map(table, built.layout);
  return PreparedScheme{std::move(padded), std::move(built), std::move(table), std::move(coverage)};
}

CountsTable oracle_sample(const PreparedScheme& prepared, std::uint64_t shots, std::uint64_t seed,
                          unsigned workers) {
  if (shots == 0) throw ConfigError("shot count must be at least 1");
  const auto& layout = prepared.built.layout;
  const SlotModel model(prepared);
  const std::size_t d = layout.ancilla_count();
  const std::size_t bc = model.bit_count();
  const std::size_t total_bits = layout.bit_labels.size();

  const unsigned pool = resolve_workers(workers, shots);
  std::vector<std::unordered_map<std::string, std::uint64_t>> partial(pool);
  parallel_chunks(shots, pool, [&](std::uint64_t begin, std::uint64_t end, unsigned w) {
    auto& local = partial[w];
    std::string bits(total_bits, '0');
    for (std::uint64_t shot = begin; shot < end; ++shot) {
      ShotStream rng(seed, shot);
      const std::uint64_t outcome = rng.next_u64() >> (64 - d);
      write_bits(bits, 0, outcome, d);
      for (std::size_t s = 0; s < layout.slots.size(); ++s) {
        const auto& m = model.at(prepared.table.slot_pair(outcome, s));
        write_bits(bits, layout.slots[s].verdict.first_bit, draw_index(m.cdf, rng.uniform()), bc);
      }
      ++local[bits];
    }
  });

  CountsTable counts(layout.bit_labels);
  counts.scheme = layout.scheme;
  counts.final_variant = layout.final_variant;
  for (const auto& part : partial) {
    for (const auto& [bits, c] : part) counts.add(bits, c);
  }
  return counts;
}

MeasuredDistribution oracle_distribution(const PreparedScheme& prepared) {
  const auto& layout = prepared.built.layout;
  const std::size_t total_bits = layout.bit_labels.size();
  if (total_bits > 30) {
    throw ConfigError("exact oracle distribution over " + std::to_string(total_bits) +
                      " bits is too large to materialize");
  }
  const SlotModel model(prepared);
  const std::size_t d = layout.ancilla_count();
  const double weight = std::ldexp(1.0, -static_cast<int>(d));

  MeasuredDistribution dist;
  dist.labels = layout.bit_labels;
  dist.probabilities.assign(std::size_t{1} << total_bits, 0.0);
  const std::size_t tail = total_bits - d;
  for (std::uint64_t o = 0; o < prepared.table.row_count(); ++o) {
    std::vector<double> cur{weight};
    for (std::size_t s = 0; s < layout.slots.size(); ++s) {
      const auto& p = model.at(prepared.table.slot_pair(o, s)).probabilities;
      std::vector<double> next(cur.size() * p.size());
      for (std::size_t i = 0; i < cur.size(); ++i) {
        for (std::size_t j = 0; j < p.size(); ++j) next[i * p.size() + j] = cur[i] * p[j];
      }
      cur = std::move(next);
    }
    std::copy(cur.begin(), cur.end(), dist.probabilities.begin() + static_cast<std::ptrdiff_t>(o << tail));
  }
  return dist;
}

MeasuredDistribution circuit_distribution(const PreparedScheme& prepared, std::size_t qubit_cap) {
  const auto& layout = prepared.built.layout;
  return exact_distribution(prepared.built.circuit,
                            assemble_input(layout, prepared.padded.ensemble), qubit_cap);
}

double total_variation(const MeasuredDistribution& p, const MeasuredDistribution& q) {
  if (p.labels != q.labels || p.probabilities.size() != q.probabilities.size()) {
    throw std::invalid_argument("distributions are over different bit layouts");
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < p.probabilities.size(); ++i) {
    sum += std::abs(p.probabilities[i] - q.probabilities[i]);
  }
  return sum / 2.0;
}

std::vector<OverlapEstimate> analytic_estimates(const PreparedScheme& prepared,
                                                const MeasuredDistribution& dist) {
  const auto& layout = prepared.built.layout;
  require_layout(dist.labels, layout);
  const std::size_t d = layout.ancilla_count();
  std::map<LabelPair, std::pair<double, double>> weights;
  for (std::uint64_t i = 0; i < dist.probabilities.size(); ++i) {
    const double p = dist.probabilities[i];
    if (p == 0.0) continue;
    const std::string bits = dist.bitstring(i);
    const std::uint64_t outcome = parse_prefix(bits, d);
    for (std::size_t s = 0; s < layout.slots.size(); ++s) {
      const auto [a, b] = prepared.table.slot_pair(outcome, s);
      if (layout.is_padding(a) || layout.is_padding(b)) continue;
      auto& w = weights[make_pair_key(a, b)];
      (layout.slots[s].verdict.decode(bits) == 0 ? w.first : w.second) += p;
    }
  }
  std::vector<OverlapEstimate> out;
  for (const auto& pair : real_pairs(layout.real_count)) {
    OverlapEstimate e;
    e.pair = pair;
    e.exact = exact_overlap(prepared.padded.ensemble.at_label(pair.first),
                            prepared.padded.ensemble.at_label(pair.second));
    if (const auto it = weights.find(pair); it != weights.end()) {
      const auto [w0, w1] = it->second;
      e.estimate = 2.0 * w0 / (w0 + w1) - 1.0;
      e.stderr_bound = 0.0;
    }
    out.push_back(e);
  }
  return out;
}

ExperimentResult run_experiment(const StateEnsemble& ensemble, const ExperimentConfig& config) {
  if (config.shots == 0) throw ConfigError("shot count must be at least 1");
  auto prepared = prepare_scheme(ensemble, config.scheme, config.final_variant);
  const auto& layout = prepared.built.layout;
  const std::size_t qubits = layout.qubit_count();

  Engine engine = config.engine;
  if (engine == Engine::Auto) {
    engine = qubits <= config.qubit_cap ? Engine::Statevector : Engine::Oracle;
  } else if (engine == Engine::Statevector && qubits > config.qubit_cap) {
    throw ConfigError("circuit needs " + std::to_string(qubits) +
                      " qubits, above the statevector cap of " +
                      std::to_string(config.qubit_cap) + "; use --engine oracle");
  }

  CountsTable counts;
  if (engine == Engine::Oracle) {
    counts = oracle_sample(prepared, config.shots, config.seed, config.workers);
  } else {
    const auto shots =
        sample_shots(prepared.built.circuit, assemble_input(layout, prepared.padded.ensemble),
                     config.shots, config.seed, config.qubit_cap, config.workers);
    std::map<std::uint64_t, std::uint64_t> by_index;
    for (const auto idx : shots.outcomes) ++by_index[idx];
    counts = CountsTable(layout.bit_labels);
    counts.scheme = layout.scheme;
    counts.final_variant = layout.final_variant;
    for (const auto& [idx, c] : by_index) {
      counts.add(index_to_bitstring(idx, layout.bit_labels.size()), c);
    }
  }

  auto tallies = tally(counts, prepared.table, layout);
  auto estimates = estimate_all(tallies, prepared.padded.ensemble);
  return ExperimentResult{std::move(prepared), engine, std::move(counts), std::move(tallies),
                          std::move(estimates)};
}

std::size_t ReplayReport::flagged_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const ReplayRow& r) { return r.flagged; }));
}

ReplayReport replay(const CountsTable& counts, const PreparedScheme& prepared,
                    const ReferenceTable& reference, double tolerance) {
  const auto& layout = prepared.built.layout;
  if (counts.scheme && *counts.scheme != layout.scheme) {
    throw DataError("counts were recorded for scheme '" + std::string(scheme_name(*counts.scheme)) +
                    "', replaying against '" + std::string(scheme_name(layout.scheme)) + "'");
  }
  if (counts.final_variant && *counts.final_variant != layout.final_variant) {
    throw DataError("counts were recorded with final test '" +
                    std::string(variant_name(*counts.final_variant)) + "', replaying against '" +
                    std::string(variant_name(layout.final_variant)) + "'");
  }
  ReplayReport report;
  report.total_shots = counts.total();
  report.tallies = tally(counts, prepared.table, layout);
  for (const auto& est : estimate_all(report.tallies, prepared.padded.ensemble)) {
    ReplayRow row;
    row.estimate = est;
    if (const auto it = reference.find(est.pair); it != reference.end()) {
      row.reference = it->second;
      if (est.estimate && it->second.estimate) {
        row.deviation = std::abs(*est.estimate - *it->second.estimate);
        row.flagged = *row.deviation > tolerance;
      }
    }
    if (!est.estimate) row.flagged = true;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace multiswap
