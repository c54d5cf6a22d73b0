#include "multiswap/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <utility>

#include "multiswap/errors.hpp"
#include "multiswap/rng.hpp"

namespace multiswap {

namespace {

using Index = std::uint64_t;

class Kernel {
 public:
  Kernel(std::vector<Amplitude>& amps, std::size_t qubits) : amps_(amps), qubits_(qubits) {}

  Index mask(Qubit q) const { return Index{1} << (qubits_ - 1 - q); }

  void apply(const Gate& g) {
    const auto& q = g.qubits;
    switch (g.kind) {
      case GateKind::H: hadamard(mask(q[0])); break;
      case GateKind::X: swap_where(0, mask(q[0]), 0); break;
      case GateKind::Z: negate_where(mask(q[0])); break;
      case GateKind::CNOT: swap_where(mask(q[0]), mask(q[1]), 0); break;
      case GateKind::CCZ: negate_where(mask(q[0]) | mask(q[1]) | mask(q[2])); break;
      case GateKind::SWAP: swap_where(0, mask(q[0]), mask(q[1])); break;
      case GateKind::CSWAP: swap_where(mask(q[0]), mask(q[1]), mask(q[2])); break;
    }
  }

 private:
  void hadamard(Index m) {
    constexpr double r = (1.0 / std::numbers::sqrt2);
    for (Index i = 0; i < amps_.size(); ++i) {
      if (i & m) continue;
      const Amplitude a = amps_[i];
      const Amplitude b = amps_[i | m];
      amps_[i] = r * (a + b);
      amps_[i | m] = r * (a - b);
    }
  }

  void negate_where(Index all) {
    for (Index i = 0; i < amps_.size(); ++i) {
      if ((i & all) == all) amps_[i] = -amps_[i];
    }
  }

  // With controls set: b == 0 flips bit a; otherwise exchanges (a=1,b=0) with
  // (a=0,b=1).
  void swap_where(Index controls, Index a, Index b) {
    for (Index i = 0; i < amps_.size(); ++i) {
      if ((i & controls) != controls || !(i & a) || (i & b)) continue;
      std::swap(amps_[i], amps_[i ^ a ^ b]);
    }
  }

  std::vector<Amplitude>& amps_;
  std::size_t qubits_;
};

void check_cap(const Circuit& circuit, std::size_t cap) {
  if (circuit.qubit_count() > cap) {
    throw ConfigError("circuit needs " + std::to_string(circuit.qubit_count()) +
                      " qubits, above the statevector cap of " + std::to_string(cap) +
                      "; use the permutation oracle engine (--engine oracle)");
  }
}

}  // namespace

std::string index_to_bitstring(std::uint64_t index, std::size_t bits) {
  std::string s(bits, '0');
  for (std::size_t j = 0; j < bits; ++j) {
    if ((index >> (bits - 1 - j)) & 1u) s[j] = '1';
  }
  return s;
}

std::string MeasuredDistribution::bitstring(std::uint64_t index) const {
  return index_to_bitstring(index, labels.size());
}

std::string ShotOutcomes::bitstring(std::size_t shot) const {
  return index_to_bitstring(outcomes.at(shot), labels.size());
}

PureState run_statevector(const Circuit& circuit, const PureState& input, std::size_t qubit_cap) {
  check_cap(circuit, qubit_cap);
  if (input.width() != circuit.qubit_count()) {
    throw DataError("input width " + std::to_string(input.width()) + " does not match " +
                    std::to_string(circuit.qubit_count()) + " circuit qubits");
  }
  std::vector<Amplitude> amps(input.amplitudes().begin(), input.amplitudes().end());
  Kernel kernel(amps, circuit.qubit_count());
  for (const auto& g : circuit.gates()) kernel.apply(g);
  return PureState::adopt(std::move(amps));
}

MeasuredDistribution marginal_distribution(const Circuit& circuit, const PureState& state) {
  const auto measured = circuit.measured();
  if (measured.empty()) throw DataError("circuit has no measured qubits");
  if (state.width() != circuit.qubit_count()) throw DataError("state width mismatch");
  const std::size_t n = circuit.qubit_count();
  const std::size_t m = measured.size();

  MeasuredDistribution dist;
  dist.labels = circuit.measured_labels();
  dist.probabilities.assign(std::size_t{1} << m, 0.0);

  std::vector<std::uint64_t> shifts(m);
  for (std::size_t j = 0; j < m; ++j) shifts[j] = n - 1 - measured[j].qubit;
  for (std::uint64_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state[i]);
    if (p == 0.0) continue;
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < m; ++j) key = (key << 1) | ((i >> shifts[j]) & 1u);
    dist.probabilities[key] += p;
  }
  return dist;
}

MeasuredDistribution exact_distribution(const Circuit& circuit, const PureState& input,
                                        std::size_t qubit_cap) {
  if (circuit.measured().empty()) throw DataError("circuit has no measured qubits");
  return marginal_distribution(circuit, run_statevector(circuit, input, qubit_cap));
}

std::map<std::string, double> measure_probabilities(const Circuit& circuit,
                                                    const PureState& input,
                                                    std::size_t qubit_cap) {
  const auto dist = exact_distribution(circuit, input, qubit_cap);
  std::map<std::string, double> out;
  for (std::uint64_t i = 0; i < dist.probabilities.size(); ++i) {
    if (dist.probabilities[i] != 0.0) out.emplace(dist.bitstring(i), dist.probabilities[i]);
  }
  return out;
}

unsigned resolve_workers(unsigned requested, std::uint64_t work_items) {
  if (requested != 0) {
    return static_cast<unsigned>(
        std::clamp<std::uint64_t>(work_items, 1, requested));
  }
  // Small jobs are not worth a thread each.
  const std::uint64_t useful = std::max<std::uint64_t>(1, work_items / 4096);
  return static_cast<unsigned>(
      std::min<std::uint64_t>(std::max(1u, std::thread::hardware_concurrency()), useful));
}

ShotOutcomes sample_distribution(const MeasuredDistribution& dist, std::uint64_t shots,
                                 std::uint64_t seed, unsigned workers) {
  if (shots == 0) throw ConfigError("shot count must be at least 1");
  std::vector<double> cdf(dist.probabilities.size());
  std::partial_sum(dist.probabilities.begin(), dist.probabilities.end(), cdf.begin());
  const double total = cdf.back();

  ShotOutcomes out;
  out.labels = dist.labels;
  out.outcomes.resize(shots);
  parallel_chunks(shots, workers, [&](std::uint64_t begin, std::uint64_t end, unsigned) {
    for (std::uint64_t s = begin; s < end; ++s) {
      ShotStream stream(seed, s);
      const double u = stream.uniform() * total;
      // First bin whose cumulative mass exceeds u; never a zero-mass bin.
      auto idx = static_cast<std::uint64_t>(std::upper_bound(cdf.begin(), cdf.end(), u) -
                                            cdf.begin());
      if (idx == cdf.size()) {
        idx = cdf.size() - 1;
        while (idx > 0 && dist.probabilities[idx] == 0.0) --idx;
      }
      out.outcomes[s] = idx;
    }
  });
  return out;
}

ShotOutcomes sample_shots(const Circuit& circuit, const PureState& input, std::uint64_t shots,
                          std::uint64_t seed, std::size_t qubit_cap, unsigned workers) {
  if (shots == 0) throw ConfigError("shot count must be at least 1");
  return sample_distribution(exact_distribution(circuit, input, qubit_cap), shots, seed,
                             workers);
}

}  // namespace multiswap
