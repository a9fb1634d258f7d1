#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace qida {

using Complex = std::complex<double>;

/// Dense normalized amplitude vector over 2^n computational basis states.
/// Qubit 0 is the least-significant bit of the basis index.
class StateVector {
 public:
  static StateVector basis_state(int n_qubits, std::uint64_t bits);
  static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  std::span<Complex> mutable_amplitudes() { return amps_; }

  const Complex& operator[](std::size_t index) const { return amps_[index]; }

  double norm() const;
  void renormalize();

 private:
  StateVector(int n_qubits, std::vector<Complex> amps)
      : n_qubits_(n_qubits), amps_(std::move(amps)) {}
  int n_qubits_;
  std::vector<Complex> amps_;
};

Complex inner_product(const StateVector& a, const StateVector& b);
/// |<a|b>|, invariant under global phase of either argument.
double overlap_magnitude(const StateVector& a, const StateVector& b);
/// Squared overlap |<a|b>|^2 in [0, 1].
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace qida
