#include "qida/circuit.hpp"

#include <stdexcept>

namespace qida {

int GateOp::n_slots() const {
  switch (kind) {
    case GateKind::Ry:
    case GateKind::Rz: return 1;
    case GateKind::Cnot: return 0;
    case GateKind::So4: return 6;
  }
  return 0;
}

int GateOp::n_qubits_touched() const {
  return (kind == GateKind::Ry || kind == GateKind::Rz) ? 1 : 2;
}

namespace {
void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::out_of_range("circuit: qubit index out of range");
}
}  // namespace

int Circuit::add_ry(int qubit) {
  check_qubit(qubit, n_qubits);
  GateOp op{GateKind::Ry, {qubit, -1}, {}};
  op.slots.fill(-1);
  op.slots[0] = n_parameters++;
  gates.push_back(op);
  return op.slots[0];
}

int Circuit::add_rz(int qubit) {
  check_qubit(qubit, n_qubits);
  GateOp op{GateKind::Rz, {qubit, -1}, {}};
  op.slots.fill(-1);
  op.slots[0] = n_parameters++;
  gates.push_back(op);
  return op.slots[0];
}

void Circuit::add_cnot(int control, int target) {
  check_qubit(control, n_qubits);
  check_qubit(target, n_qubits);
  if (control == target) throw std::invalid_argument("circuit: cnot qubits must differ");
  GateOp op{GateKind::Cnot, {control, target}, {}};
  op.slots.fill(-1);
  gates.push_back(op);
}

std::array<int, 6> Circuit::add_so4(int qubit_low, int qubit_high) {
  check_qubit(qubit_low, n_qubits);
  check_qubit(qubit_high, n_qubits);
  if (qubit_low == qubit_high) throw std::invalid_argument("circuit: so4 qubits must differ");
  GateOp op{GateKind::So4, {qubit_low, qubit_high}, {}};
  for (int i = 0; i < 6; ++i) op.slots[i] = n_parameters++;
  gates.push_back(op);
  return op.slots;
}

void Circuit::validate() const {
  if (n_qubits < 1 || n_qubits > 30)
    throw std::invalid_argument("circuit: n_qubits must be in [1, 30]");
  if (n_qubits < 64 && reference_bitstring >> n_qubits)
    throw std::invalid_argument("circuit: reference bitstring wider than register");
  for (const GateOp& g : gates) {
    for (int i = 0; i < g.n_qubits_touched(); ++i) check_qubit(g.qubits[i], n_qubits);
    if (g.n_qubits_touched() == 2 && g.qubits[0] == g.qubits[1])
      throw std::invalid_argument("circuit: two-qubit gate with identical qubits");
    for (int i = 0; i < g.n_slots(); ++i)
      if (g.slots[i] < 0 || g.slots[i] >= n_parameters)
        throw std::invalid_argument("circuit: parameter slot out of range");
  }
}

}  // namespace qida
