#include "multiswap/circuit.hpp"

#include <algorithm>
#include <stdexcept>

namespace multiswap {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::CNOT: return "CNOT";
    case GateKind::CCZ: return "CCZ";
    case GateKind::SWAP: return "SWAP";
    case GateKind::CSWAP: return "CSWAP";
  }
  return "?";
}

std::size_t gate_arity(GateKind kind) {
  switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::Z: return 1;
    case GateKind::CNOT:
    case GateKind::SWAP: return 2;
    case GateKind::CCZ:
    case GateKind::CSWAP: return 3;
  }
  throw std::invalid_argument("unknown gate kind");
}

Circuit::Circuit(std::vector<QubitRole> roles) : roles_(std::move(roles)) {}

std::vector<std::string> Circuit::measured_labels() const {
  std::vector<std::string> labels;
  labels.reserve(measured_.size());
  for (const auto& m : measured_) labels.push_back(m.label);
  return labels;
}

void Circuit::add(const Gate& gate) {
  const auto ops = gate.operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i] >= qubit_count()) {
      throw std::invalid_argument(std::string(gate_name(gate.kind)) + " operand " +
                                  std::to_string(ops[i]) + " out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ops[i] == ops[j]) {
        throw std::invalid_argument(std::string(gate_name(gate.kind)) +
                                    " operands must be distinct");
      }
    }
  }
  gates_.push_back(gate);
}

void Circuit::measure(Qubit qubit, std::string label) {
  if (qubit >= qubit_count()) throw std::invalid_argument("measured qubit out of range");
  for (const auto& m : measured_) {
    if (m.qubit == qubit) throw std::invalid_argument("qubit measured twice");
    if (m.label == label) throw std::invalid_argument("duplicate classical label " + label);
  }
  measured_.push_back({qubit, std::move(label)});
}

ResourceProfile count_resources(const Circuit& circuit) {
  ResourceProfile p;
  p.qubit_count = circuit.qubit_count();
  p.gate_count_total = circuit.gates().size();
  p.cswap_count = static_cast<std::size_t>(
      std::ranges::count(circuit.gates(), GateKind::CSWAP, &Gate::kind));
  p.ancilla_count = static_cast<std::size_t>(
      std::ranges::count(circuit.roles(), QubitRole::Ancilla));
  return p;
}

}  // namespace multiswap
