#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace multiswap {

using Qubit = std::uint32_t;

enum class GateKind { H, X, Z, CNOT, CCZ, SWAP, CSWAP };

enum class QubitRole { Ancilla, Data, Result };

std::string_view gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);

// Controls first, then targets: CNOT(c, t), CCZ(a, b, c), CSWAP(c, t0, t1).
struct Gate {
  GateKind kind;
  std::array<Qubit, 3> qubits{};

  std::size_t arity() const { return gate_arity(kind); }
  std::span<const Qubit> operands() const { return {qubits.data(), arity()}; }

  static Gate h(Qubit q) { return {GateKind::H, {q}}; }
  static Gate x(Qubit q) { return {GateKind::X, {q}}; }
  static Gate z(Qubit q) { return {GateKind::Z, {q}}; }
  static Gate cnot(Qubit control, Qubit target) { return {GateKind::CNOT, {control, target}}; }
  static Gate ccz(Qubit a, Qubit b, Qubit c) { return {GateKind::CCZ, {a, b, c}}; }
  static Gate swap(Qubit a, Qubit b) { return {GateKind::SWAP, {a, b}}; }
  static Gate cswap(Qubit control, Qubit a, Qubit b) { return {GateKind::CSWAP, {control, a, b}}; }

  friend bool operator==(const Gate&, const Gate&) = default;
};

struct MeasuredBit {
  Qubit qubit;
  std::string label;
};

// Ordered gate list over indexed qubit lines. Measurements are terminal and
// their declaration order is the bitstring order (leftmost first).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::vector<QubitRole> roles);

  std::size_t qubit_count() const { return roles_.size(); }
  std::span<const QubitRole> roles() const { return roles_; }
  std::span<const Gate> gates() const { return gates_; }
  std::span<const MeasuredBit> measured() const { return measured_; }
  std::vector<std::string> measured_labels() const;

  // Throws std::invalid_argument on out-of-range or repeated operands.
  void add(const Gate& gate);
  // Throws on a qubit or label that is already measured.
  void measure(Qubit qubit, std::string label);

 private:
  std::vector<QubitRole> roles_;
  std::vector<Gate> gates_;
  std::vector<MeasuredBit> measured_;
};

struct ResourceProfile {
  std::size_t cswap_count = 0;
  std::size_t ancilla_count = 0;
  std::size_t gate_count_total = 0;
  std::size_t qubit_count = 0;

  friend bool operator==(const ResourceProfile&, const ResourceProfile&) = default;
};

ResourceProfile count_resources(const Circuit& circuit);

}  // namespace multiswap
