#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "multiswap/circuit.hpp"
#include "multiswap/state.hpp"

namespace multiswap {

inline constexpr std::size_t kDefaultQubitCap = 26;

// Dense distribution over the measured bits of a circuit. Index bit
// (labels.size() - 1 - j) holds measured bit j, so formatting an index as a
// bitstring puts labels[0] leftmost.
struct MeasuredDistribution {
  std::vector<std::string> labels;
  std::vector<double> probabilities;

  std::string bitstring(std::uint64_t index) const;
};

std::string index_to_bitstring(std::uint64_t index, std::size_t bits);

// Applies the circuit to `input` (width must equal qubit_count). Throws
// ConfigError beyond `qubit_cap`, DataError on width mismatch.
PureState run_statevector(const Circuit& circuit, const PureState& input,
                          std::size_t qubit_cap = kDefaultQubitCap);

// Marginal of |state|^2 over the circuit's measured bits. No gates are applied.
MeasuredDistribution marginal_distribution(const Circuit& circuit, const PureState& state);

// run_statevector followed by marginal_distribution. Throws DataError when
// nothing is measured.
MeasuredDistribution exact_distribution(const Circuit& circuit, const PureState& input,
                                        std::size_t qubit_cap = kDefaultQubitCap);

// Sparse map form: bitstring -> probability, non-zero entries only.
std::map<std::string, double> measure_probabilities(const Circuit& circuit,
                                                    const PureState& input,
                                                    std::size_t qubit_cap = kDefaultQubitCap);

struct ShotOutcomes {
  std::vector<std::string> labels;
  std::vector<std::uint64_t> outcomes;  // one distribution index per shot

  std::string bitstring(std::size_t shot) const;
};

// Draws `shots` i.i.d. outcomes from `dist`. Shot s uses ShotStream(seed, s),
// so results are identical for any worker count (0 = hardware concurrency).
ShotOutcomes sample_distribution(const MeasuredDistribution& dist, std::uint64_t shots,
                                 std::uint64_t seed, unsigned workers = 0);

// Exact marginal once, then multinomial draws. Throws ConfigError when shots == 0.
ShotOutcomes sample_shots(const Circuit& circuit, const PureState& input, std::uint64_t shots,
                          std::uint64_t seed, std::size_t qubit_cap = kDefaultQubitCap,
                          unsigned workers = 0);

// Runs body(begin, end, worker) over [0, count) split into contiguous chunks.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned workers, Body&& body);

unsigned resolve_workers(unsigned requested, std::uint64_t work_items);

}  // namespace multiswap

#include <algorithm>
#include <thread>

namespace multiswap {

template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned workers, Body&& body) {
  workers = resolve_workers(workers, count);
  if (workers <= 1) {
    body(std::uint64_t{0}, count, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    const std::uint64_t begin = std::min<std::uint64_t>(count, w * chunk);
    const std::uint64_t end = std::min<std::uint64_t>(count, begin + chunk);
    pool.emplace_back([&body, begin, end, w] { body(begin, end, w); });
  }
}

}  // namespace multiswap
