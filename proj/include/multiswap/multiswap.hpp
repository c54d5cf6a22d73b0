#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "multiswap/layout.hpp"
#include "multiswap/state.hpp"

namespace multiswap {

// Smallest power of two >= max(m, 4). The construction needs four groups.
std::size_t padded_size(std::size_t m);

struct PaddedEnsemble {
  StateEnsemble ensemble;
  std::size_t original_count;

  std::size_t size() const { return ensemble.size(); }
  // 1-based labels of the appended |0...0> states.
  std::vector<std::size_t> padded_labels() const;
};

PaddedEnsemble pad_inputs(const StateEnsemble& ensemble);

// Four equal, contiguous, ordered groups of register positions.
struct GroupPartition {
  std::array<std::vector<std::size_t>, 4> groups;
};

// Throws std::invalid_argument unless registers.size() is a multiple of 4.
GroupPartition partition_groups(std::span<const std::size_t> registers);

// Rule 1 exchanges G2 and G3 pointwise; rule 2 exchanges G2 and G4.
enum class SwapRule { Rule1, Rule2 };

// The (a, b) register pairs a rule exchanges, in group order.
std::vector<std::pair<std::size_t, std::size_t>> rule_pairs(const GroupPartition& partition,
                                                            SwapRule rule);

// Classical application of a rule to a label sequence (length multiple of 4).
std::vector<std::size_t> apply_rule(std::vector<std::size_t> labels, SwapRule rule);

// Recursive U_n layout for n = 2^k >= 4 registers.
//
// Level l (top level l = 0) owns the ancilla pair s_{2l+1}, s_{2l+2}: the
// second controls the rule-1 block, the first the rule-2 block, and the rule-1
// block is applied first. Level l+1 acts on both halves (G1 G2) and (G3 G4)
// with one shared ancilla pair, down to the 4-register base case. Slots are
// (q_{2i-1}, q_{2i}). Throws std::invalid_argument if n is not a power of two >= 4.
SchemeLayout new_scheme_layout(std::size_t n, std::size_t width, SwapTestVariant final_variant,
                               std::size_t real_count);

BuiltScheme build_un(std::size_t n, std::size_t width,
                     SwapTestVariant final_variant = SwapTestVariant::Standard);
BuiltScheme build_u4(std::size_t width = 1,
                     SwapTestVariant final_variant = SwapTestVariant::Standard);

// Closed forms for n = 2^k, register level (one CSWAP per register pair).
std::size_t new_scheme_cswaps(std::size_t n);    // (k-1) 2^(k-1)
std::size_t new_scheme_ancillas(std::size_t n);  // 2(k-1)

// Builds the layout for the chosen scheme on an already padded ensemble.
BuiltScheme build_scheme(Scheme scheme, std::size_t n, std::size_t width,
                         SwapTestVariant final_variant, std::size_t real_count);

}  // namespace multiswap
