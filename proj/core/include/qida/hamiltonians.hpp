#pragma once

#include "qida/integrals.hpp"
#include "qida/pauli.hpp"

namespace qida {

enum class LadderKind { Creation, Annihilation };

/// Jordan-Wigner image of a fermionic ladder operator on the given mode:
/// (X -/+ iY)/2 on the target qubit times Z on every lower-index qubit.
PauliSum jw_ladder(int orbital_index, LadderKind kind, int n_qubits);

/// Qubit Hamiltonian of the electronic problem: expands the second-quantized
/// Hamiltonian over spin orbitals (alpha block first, then beta), maps each
/// ladder operator through Jordan-Wigner and adds core_energy * identity.
PauliSum build_qubit_hamiltonian(const MolecularIntegrals& mo);

enum class LatticeTopology { Chain, Ring };

/// J * sum over nearest-neighbour edges of (XX + YY + ZZ).
PauliSum heisenberg_hamiltonian(int n_qubits, double coupling, LatticeTopology topology);

/// Antiferromagnetic product reference |0101...>: every even qubit occupied.
std::uint64_t neel_bitstring(int n_qubits);

}  // namespace qida
