#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "multiswap/layout.hpp"

namespace multiswap {

// Largest ancilla count for which a full table is materialized (2^20 rows).
inline constexpr std::size_t kMaxTableAncillas = 20;

struct SlotEntry {
  std::uint64_t outcome;
  std::size_t slot;

  friend bool operator==(const SlotEntry&, const SlotEntry&) = default;
  friend auto operator<=>(const SlotEntry&, const SlotEntry&) = default;
};

// Unordered pair of 1-based labels with first < second.
using LabelPair = std::pair<std::size_t, std::size_t>;

LabelPair make_pair_key(std::size_t a, std::size_t b);

// Ancilla outcome -> register contents. Row o lists, for each register
// position, the 1-based label of the input state it holds after the network
// ran with ancilla outcome o. Outcome bit i (leftmost) is ancilla i.
class PermutationTable {
 public:
  PermutationTable(std::size_t ancillas, std::size_t registers,
                   std::vector<std::pair<std::size_t, std::size_t>> slots,
                   std::vector<std::size_t> flat_rows);

  std::size_t ancilla_count() const { return ancillas_; }
  std::size_t register_count() const { return registers_; }
  std::uint64_t row_count() const { return std::uint64_t{1} << ancillas_; }
  std::span<const std::pair<std::size_t, std::size_t>> slots() const { return slots_; }

  std::span<const std::size_t> row(std::uint64_t outcome) const;
  // Labels held by the slot's (first, second) registers, in register order.
  std::pair<std::size_t, std::size_t> slot_pair(std::uint64_t outcome, std::size_t slot) const;
  std::string outcome_bits(std::uint64_t outcome) const;

 private:
  std::size_t ancillas_;
  std::size_t registers_;
  std::vector<std::pair<std::size_t, std::size_t>> slots_;
  std::vector<std::size_t> rows_;
};

// Classical replay of the built network's CSWAPs on qubit-line contents, once
// per ancilla outcome. The circuit is the authority; throws std::logic_error if
// a register's qubits get separated or a non-ancilla controls a swap.
PermutationTable derive_permutation_table(const BuiltScheme& built);

using CoverageMap = std::map<LabelPair, std::vector<SlotEntry>>;

// Every unordered pair of real (non-padding) labels -> the (outcome, slot)
// entries that test it. Throws std::logic_error if a real pair is uncovered.
CoverageMap pair_coverage_map(const PermutationTable& table, const SchemeLayout& layout);

}  // namespace multiswap
