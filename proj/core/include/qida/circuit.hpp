#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace qida {

enum class GateKind { Ry, Rz, Cnot, So4 };

/// One gate in a parameterized circuit. `slots` index into the circuit's
/// parameter vector: 1 slot for Ry/Rz, 0 for CNOT, 6 for SO4.
struct GateOp {
  GateKind kind;
  std::array<int, 2> qubits{-1, -1};  // [target] / [control, target] / [low, high]
  std::array<int, 6> slots{-1, -1, -1, -1, -1, -1};

  int n_slots() const;
  int n_qubits_touched() const;
};

/// Ordered gate list with a computational-basis reference state.
struct Circuit {
  int n_qubits = 0;
  std::uint64_t reference_bitstring = 0;
  std::vector<GateOp> gates;
  int n_parameters = 0;

  explicit Circuit(int n_qubits_ = 1, std::uint64_t reference = 0)
      : n_qubits(n_qubits_), reference_bitstring(reference) {}

  int add_ry(int qubit);           // returns the new parameter slot
  int add_rz(int qubit);
  void add_cnot(int control, int target);
  std::array<int, 6> add_so4(int qubit_low, int qubit_high);

  void validate() const;
};

}  // namespace qida
