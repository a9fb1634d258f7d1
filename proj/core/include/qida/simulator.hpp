#pragma once

#include <Eigen/Dense>
#include <array>
#include <span>

#include "qida/circuit.hpp"
#include "qida/pauli.hpp"
#include "qida/statevector.hpp"

namespace qida {

/// Single-qubit rotation matrices (exp(-i theta/2 Y) and exp(-i theta/2 Z)).
Eigen::Matrix2cd ry_matrix(double theta);
Eigen::Matrix2cd rz_matrix(double theta);
Eigen::Matrix2cd ry_derivative(double theta);
Eigen::Matrix2cd rz_derivative(double theta);

/// Fully parameterized real-orthogonal two-qubit correlator: conjugates
/// A (x) B by the magic-basis change, with A = Rz(p0) Ry(p1) Rz(p2) on the
/// low qubit and B = Rz(p3) Ry(p4) Rz(p5) on the high qubit. The matrix is
/// indexed by (bit_low + 2 * bit_high) and lands in SO(4) for any angles.
Eigen::Matrix4cd so4_unitary(std::span<const double, 6> params);
/// Partial derivative of so4_unitary with respect to one of the six angles.
Eigen::Matrix4cd so4_derivative(std::span<const double, 6> params, int which);
/// The fixed magic-basis change used by so4_unitary (unit tests check its
/// 2-CNOT circuit realization).
const Eigen::Matrix4cd& magic_basis();

/// In-place amplitude kernels over the packed basis-index layout. They act on
/// raw amplitude buffers so gradient sweeps can reuse them on work vectors.
void apply_single_qubit(std::span<Complex> amps, int qubit, const Eigen::Matrix2cd& m);
void apply_two_qubit(std::span<Complex> amps, int qubit_low, int qubit_high,
                     const Eigen::Matrix4cd& m);
void apply_cnot(std::span<Complex> amps, int control, int target);
void apply_gate(std::span<Complex> amps, const GateOp& gate, std::span<const double> params);
/// Inverse of a single gate (used by the reverse-sweep gradient).
void unapply_gate(std::span<Complex> amps, const GateOp& gate, std::span<const double> params);

StateVector apply_circuit(const Circuit& circuit, std::span<const double> params);
StateVector apply_circuit(const Circuit& circuit, std::span<const double> params,
                          const StateVector& initial);

/// Term-wise <psi|P|psi> without materializing dense operators; throws if the
/// accumulated imaginary part exceeds 1e-8.
double expectation(const StateVector& state, const PauliSum& observable);
/// H|psi> accumulated term by term (generally unnormalized).
std::vector<Complex> apply_observable(const PauliSum& observable,
                                      std::span<const Complex> amps);

/// Dense 2^n x 2^n matrix of an observable (n <= 16).
Eigen::MatrixXcd to_dense_matrix(const PauliSum& observable);

struct GroundState {
  double energy;
  StateVector state;
};

/// Lowest eigenpair of the dense observable matrix (n <= 16).
GroundState exact_ground_state(const PauliSum& observable);

}  // namespace qida
