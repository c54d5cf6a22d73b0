#include "multiswap/permutation.hpp"

#include <numeric>
#include <stdexcept>

#include "multiswap/simulator.hpp"

namespace multiswap {

LabelPair make_pair_key(std::size_t a, std::size_t b) {
  return a < b ? LabelPair{a, b} : LabelPair{b, a};
}

PermutationTable::PermutationTable(std::size_t ancillas, std::size_t registers,
                                   std::vector<std::pair<std::size_t, std::size_t>> slots,
                                   std::vector<std::size_t> flat_rows)
    : ancillas_(ancillas), registers_(registers), slots_(std::move(slots)),
      rows_(std::move(flat_rows)) {
  if (ancillas_ > kMaxTableAncillas) throw std::invalid_argument("too many ancillas to tabulate");
  if (rows_.size() != row_count() * registers_) throw std::invalid_argument("table size mismatch");
}

std::span<const std::size_t> PermutationTable::row(std::uint64_t outcome) const {
  if (outcome >= row_count()) throw std::out_of_range("ancilla outcome out of range");
  return std::span<const std::size_t>(rows_).subspan(outcome * registers_, registers_);
}

std::pair<std::size_t, std::size_t> PermutationTable::slot_pair(std::uint64_t outcome,
                                                                std::size_t slot) const {
  const auto r = row(outcome);
  const auto& [first, second] = slots_.at(slot);
  return {r[first], r[second]};
}

std::string PermutationTable::outcome_bits(std::uint64_t outcome) const {
  return index_to_bitstring(outcome, ancillas_);
}

PermutationTable derive_permutation_table(const BuiltScheme& built) {
  const auto& layout = built.layout;
  const std::size_t d = layout.ancilla_count();
  if (d > kMaxTableAncillas) {
    throw std::invalid_argument("permutation table with " + std::to_string(d) +
                                " ancillas is too large to tabulate");
  }

  std::vector<std::int64_t> ancilla_of_qubit(built.network.qubit_count(), -1);
  for (std::size_t i = 0; i < d; ++i) ancilla_of_qubit[layout.ancilla_qubit(i)] = static_cast<std::int64_t>(i);

  std::vector<Gate> swaps;
  for (const auto& g : built.network.gates()) {
    if (g.kind == GateKind::H && ancilla_of_qubit[g.qubits[0]] >= 0) continue;
    if (g.kind != GateKind::CSWAP || ancilla_of_qubit[g.qubits[0]] < 0) {
      throw std::logic_error("network contains a gate other than ancilla-controlled CSWAP");
    }
    swaps.push_back(g);
  }

  const std::uint64_t rows = std::uint64_t{1} << d;
  std::vector<std::size_t> flat(rows * layout.n);
  std::vector<Qubit> line(built.network.qubit_count());
  for (std::uint64_t outcome = 0; outcome < rows; ++outcome) {
    std::iota(line.begin(), line.end(), Qubit{0});
    for (const auto& g : swaps) {
      const auto control = static_cast<std::size_t>(ancilla_of_qubit[g.qubits[0]]);
      if ((outcome >> (d - 1 - control)) & 1u) std::swap(line[g.qubits[1]], line[g.qubits[2]]);
    }
    for (std::size_t pos = 0; pos < layout.n; ++pos) {
      const Qubit head = line[layout.register_qubit(pos, 0)];
      const Qubit base = layout.register_qubit(0, 0);
      if (head < base || (head - base) % layout.width != 0) {
        throw std::logic_error("register contents are not aligned after the network");
      }
      const std::size_t source = (head - base) / layout.width;
      for (std::size_t bit = 1; bit < layout.width; ++bit) {
        if (line[layout.register_qubit(pos, bit)] != layout.register_qubit(source, bit)) {
          throw std::logic_error("a register's qubits were split by the network");
        }
      }
      flat[outcome * layout.n + pos] = source + 1;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (const auto& s : layout.slots) slots.emplace_back(s.first, s.second);
  return PermutationTable(d, layout.n, std::move(slots), std::move(flat));
}

CoverageMap pair_coverage_map(const PermutationTable& table, const SchemeLayout& layout) {
  CoverageMap map;
  for (std::size_t i = 1; i <= layout.real_count; ++i) {
    for (std::size_t j = i + 1; j <= layout.real_count; ++j) map[{i, j}];
  }
  for (std::uint64_t o = 0; o < table.row_count(); ++o) {
    for (std::size_t s = 0; s < table.slots().size(); ++s) {
      const auto [a, b] = table.slot_pair(o, s);
      if (layout.is_padding(a) || layout.is_padding(b)) continue;
      map[make_pair_key(a, b)].push_back({o, s});
    }
  }
  for (const auto& [pair, entries] : map) {
    if (entries.empty()) {
      throw std::logic_error("construction bug: pair (" + std::to_string(pair.first) + "," +
                             std::to_string(pair.second) + ") is never tested");
    }
  }
  return map;
}

}  // namespace multiswap
