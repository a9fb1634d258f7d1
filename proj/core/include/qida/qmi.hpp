#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qida/sparse_state.hpp"
#include "qida/statevector.hpp"

namespace qida {

/// One- or two-qubit reduced density matrix (2x2 or 4x4, Hermitian, trace 1).
struct Rdm {
  Eigen::MatrixXcd matrix;
  int subset_size() const { return matrix.rows() == 2 ? 1 : 2; }
  void validate(double tol = 1e-10) const;
};

/// Symmetric nonnegative pairwise mutual-information matrix with zero
/// diagonal; entries are bounded by 2 ln 2 (natural-log entropies).
class QmiMatrix {
 public:
  QmiMatrix(int n_qubits, Eigen::MatrixXd values);

  int n_qubits() const { return n_qubits_; }
  double value(int u, int v) const { return values_(u, v); }
  const Eigen::MatrixXd& values() const { return values_; }
  double max_value() const;

  /// All pairs (u < v) with their QMI, sorted by descending value
  /// (ties by ascending (u, v)).
  std::vector<std::tuple<int, int, double>> sorted_pairs() const;

 private:
  int n_qubits_;
  Eigen::MatrixXd values_;
};

Rdm one_qubit_rdm(const SparseState& state, int u);
Rdm one_qubit_rdm(const StateVector& state, int u);
/// Row/column basis ordered (bit_u, bit_v) with u in the low-order position.
Rdm two_qubit_rdm(const SparseState& state, int u, int v);
Rdm two_qubit_rdm(const StateVector& state, int u, int v);

/// -sum lambda ln lambda with eigenvalues clamped into [0, 1].
double von_neumann_entropy(const Rdm& rdm);

QmiMatrix qmi_matrix(const SparseState& state);
QmiMatrix qmi_matrix(const StateVector& state);

}  // namespace qida
