#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "multiswap/circuit.hpp"
#include "multiswap/state.hpp"

namespace multiswap {

// Two-register swap test layouts:
//   Standard     H, CSWAP per qubit pair, H, measure the ancilla.
//   Ccz          CSWAP expanded as CNOT . (H CCZ H) . CNOT with the trailing data
//                gates dropped; only the ancilla is measured.
//   Deferred     data rotated into the Bell-type basis first, then the ancilla
//                picks up the phase through CCZ; ancilla and data are measured
//                and the ancilla bit equals the classical parity of the data.
//   Destructive  no ancilla: CNOT(a_k -> b_k), H(a_k), measure both registers.
enum class SwapTestVariant { Standard, Ccz, Deferred, Destructive };

std::string_view variant_name(SwapTestVariant v);
// Throws ConfigError on an unknown name.
SwapTestVariant parse_variant(std::string_view name);
std::size_t variant_ancillas(SwapTestVariant v);

// Locates one swap-test verdict inside a measured bitstring. The test's bits
// are contiguous: [first_bit, first_bit + bit_count).
//   Standard/Ccz:  one bit, the ancilla.
//   Deferred:      ancilla, then a_0..a_{w-1}, then b_0..b_{w-1}; verdict is the ancilla.
//   Destructive:   a_0..a_{w-1}, then b_0..b_{w-1}; verdict is XOR_k (a_k AND b_k).
struct VerdictRule {
  SwapTestVariant variant = SwapTestVariant::Standard;
  std::size_t first_bit = 0;
  std::size_t bit_count = 1;

  // 0 = "same" (success), 1 = "different". `bits` is a full '0'/'1' string.
  int decode(std::string_view bits) const;
  // Same, on the slot's own bits packed into an integer (first bit most significant).
  int decode_local(std::uint64_t local_bits) const;

  friend bool operator==(const VerdictRule&, const VerdictRule&) = default;
};

struct SwapTestLabels {
  std::string ancilla;              // unused for Destructive
  std::vector<std::string> a, b;    // per-qubit labels; used by Deferred/Destructive
};

// Appends a swap test between equal-width registers `a` and `b` and declares its
// measurements. `ancilla` must be set iff the variant uses one.
VerdictRule append_swap_test(Circuit& circuit, SwapTestVariant variant,
                             std::span<const Qubit> a, std::span<const Qubit> b,
                             std::optional<Qubit> ancilla, const SwapTestLabels& labels);

struct SwapTestCircuit {
  Circuit circuit;
  VerdictRule verdict;
  std::optional<Qubit> ancilla;
  std::vector<Qubit> register_a, register_b;
};

// Standalone test on [ancilla?][register a][register b].
SwapTestCircuit build_swap_test(SwapTestVariant variant, std::size_t width);

// Input for build_swap_test: |0> (if an ancilla is used) (x) a (x) b.
PureState swap_test_input(const SwapTestCircuit& test, const PureState& a, const PureState& b);

// Exact probability of verdict 0.
double success_probability(SwapTestVariant variant, const PureState& a, const PureState& b);

// Exact verdict distribution of a standalone test: [P(0), P(1)].
std::array<double, 2> verdict_distribution(const SwapTestCircuit& test, const PureState& a,
                                           const PureState& b);

// |<phi|psi>|^2 = 2 P(0) - 1, not clamped. Throws DataError outside [0, 1].
double overlap_from_prob(double p0);

// Classical post-processing of the destructive test: parity of the per-pair
// AND bits. Throws DataError on empty or unequal registers, or non-binary bits.
int destructive_decode(std::span<const std::uint8_t> a_bits, std::span<const std::uint8_t> b_bits);

}  // namespace multiswap
