#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "multiswap/circuit.hpp"
#include "multiswap/state.hpp"
#include "multiswap/swap_test.hpp"

namespace multiswap {

enum class Scheme { New, San };

std::string_view scheme_name(Scheme s);
// Throws ConfigError on an unknown name.
Scheme parse_scheme(std::string_view name);

// One register-level controlled swap: ancilla `control` exchanges the
// registers at positions `a` and `b` (0-based). Expands to `width` qubit CSWAPs.
struct RegisterSwap {
  std::size_t control;
  std::size_t a;
  std::size_t b;

  friend bool operator==(const RegisterSwap&, const RegisterSwap&) = default;
};

// A final swap test between two register positions.
struct SlotPlan {
  std::size_t first;
  std::size_t second;
  VerdictRule verdict;
};

// Everything needed to wire, decode and tally a multi-state scheme.
//
// Qubit lines: ancillas [0, d), then register p at d + p*width ... , then one
// result qubit per slot for variants that need one. Measured bits: the d
// ancillas in order, then each slot's bits in slot order.
struct SchemeLayout {
  Scheme scheme = Scheme::New;
  std::size_t n = 0;           // registers, a power of two >= 4
  std::size_t width = 1;       // qubits per register
  std::size_t real_count = 0;  // labels above this are |0...0> padding
  SwapTestVariant final_variant = SwapTestVariant::Standard;

  std::vector<std::string> ancilla_labels;
  std::vector<std::string> ancilla_roles;  // human-readable, for audit output
  std::vector<RegisterSwap> network;       // in gate order
  std::vector<SlotPlan> slots;
  std::vector<std::string> bit_labels;

  std::size_t ancilla_count() const { return ancilla_labels.size(); }
  std::size_t result_qubits() const { return slots.size() * variant_ancillas(final_variant); }
  std::size_t qubit_count() const { return ancilla_count() + n * width + result_qubits(); }

  Qubit ancilla_qubit(std::size_t i) const { return static_cast<Qubit>(i); }
  Qubit register_qubit(std::size_t position, std::size_t bit) const {
    return static_cast<Qubit>(ancilla_count() + position * width + bit);
  }
  Qubit result_qubit(std::size_t slot) const {
    return static_cast<Qubit>(ancilla_count() + n * width + slot);
  }
  bool is_padding(std::size_t label) const { return label > real_count; }
};

struct BuiltScheme {
  SchemeLayout layout;
  Circuit network;  // |+> preparation and controlled swaps; ancillas measured
  Circuit circuit;  // network plus final swap tests; ancillas and results measured
};

// Wires `layout` (network, slots, ancilla labels already set) into circuits and
// fills in the slot verdict rules and bit labels.
BuiltScheme wire_scheme(SchemeLayout layout);

// |0>^d (x) phi_1 (x) ... (x) phi_n (x) |0>^results.
PureState assemble_input(const SchemeLayout& layout, const StateEnsemble& padded);

// "q<p>" for width 1, "q<p>_<bit>" otherwise (p is 1-based).
std::string register_bit_label(const SchemeLayout& layout, std::size_t position, std::size_t bit);

}  // namespace multiswap
