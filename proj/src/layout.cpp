#include "multiswap/layout.hpp"

#include <stdexcept>

#include "multiswap/errors.hpp"

namespace multiswap {

std::string_view scheme_name(Scheme s) { return s == Scheme::New ? "new" : "san"; }

Scheme parse_scheme(std::string_view name) {
  if (name == "new") return Scheme::New;
  if (name == "san") return Scheme::San;
  throw ConfigError("unknown scheme '" + std::string(name) + "' (expected new or san)");
}

std::string register_bit_label(const SchemeLayout& layout, std::size_t position, std::size_t bit) {
  std::string label = "q" + std::to_string(position + 1);
  if (layout.width > 1) label += "_" + std::to_string(bit);
  return label;
}

BuiltScheme wire_scheme(SchemeLayout layout) {
  std::vector<QubitRole> roles(layout.ancilla_count(), QubitRole::Ancilla);
  roles.insert(roles.end(), layout.n * layout.width, QubitRole::Data);
  roles.insert(roles.end(), layout.slots.size() * variant_ancillas(layout.final_variant),
               QubitRole::Result);

  Circuit circuit(roles);
  for (std::size_t i = 0; i < layout.ancilla_count(); ++i) {
    circuit.add(Gate::h(layout.ancilla_qubit(i)));
  }
  for (const auto& sw : layout.network) {
    if (sw.control >= layout.ancilla_count() || sw.a >= layout.n || sw.b >= layout.n) {
      throw std::logic_error("register swap refers to a missing ancilla or register");
    }
    for (std::size_t bit = 0; bit < layout.width; ++bit) {
      circuit.add(Gate::cswap(layout.ancilla_qubit(sw.control), layout.register_qubit(sw.a, bit),
                              layout.register_qubit(sw.b, bit)));
    }
  }
  for (std::size_t i = 0; i < layout.ancilla_count(); ++i) {
    circuit.measure(layout.ancilla_qubit(i), layout.ancilla_labels[i]);
  }
  Circuit network = circuit;

  const bool with_result = variant_ancillas(layout.final_variant) == 1;
  for (std::size_t s = 0; s < layout.slots.size(); ++s) {
    auto& slot = layout.slots[s];
    std::vector<Qubit> a, b;
    SwapTestLabels labels{"r" + std::to_string(s + 1), {}, {}};
    for (std::size_t bit = 0; bit < layout.width; ++bit) {
      a.push_back(layout.register_qubit(slot.first, bit));
      b.push_back(layout.register_qubit(slot.second, bit));
      labels.a.push_back(register_bit_label(layout, slot.first, bit));
      labels.b.push_back(register_bit_label(layout, slot.second, bit));
    }
    std::optional<Qubit> ancilla;
    if (with_result) ancilla = layout.result_qubit(s);
    slot.verdict = append_swap_test(circuit, layout.final_variant, a, b, ancilla, labels);
  }
  layout.bit_labels = circuit.measured_labels();
  return BuiltScheme{std::move(layout), std::move(network), std::move(circuit)};
}

PureState assemble_input(const SchemeLayout& layout, const StateEnsemble& padded) {
  if (padded.size() != layout.n || padded.width() != layout.width) {
    throw DataError("ensemble of " + std::to_string(padded.size()) + " width-" +
                    std::to_string(padded.width()) + " states does not fit a layout of " +
                    std::to_string(layout.n) + " width-" + std::to_string(layout.width) +
                    " registers");
  }
  std::vector<PureState> parts;
  parts.reserve(layout.n + 2);
  if (layout.ancilla_count() > 0) parts.push_back(PureState::basis(layout.ancilla_count()));
  for (const auto& s : padded.states()) parts.push_back(s);
  if (layout.result_qubits() > 0) parts.push_back(PureState::basis(layout.result_qubits()));
  return tensor_product(parts);
}

}  // namespace multiswap
