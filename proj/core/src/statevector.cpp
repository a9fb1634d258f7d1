#include "qida/statevector.hpp"

#include <cmath>
#include <stdexcept>

namespace qida {

namespace {
void check_n(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 30)
    throw std::invalid_argument("statevector: n_qubits must be in [1, 30]");
}
}  // namespace

StateVector StateVector::basis_state(int n_qubits, std::uint64_t bits) {
  check_n(n_qubits);
  if (n_qubits < 64 && bits >> n_qubits)
    throw std::invalid_argument("statevector: reference bitstring wider than register");
  std::vector<Complex> amps(std::size_t{1} << n_qubits, Complex{0, 0});
  amps[bits] = 1.0;
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amplitudes) {
  check_n(n_qubits);
  if (amplitudes.size() != (std::size_t{1} << n_qubits))
    throw std::invalid_argument("statevector: amplitude count must be 2^n");
  StateVector state(n_qubits, std::move(amplitudes));
  const double n = state.norm();
  if (std::abs(n - 1.0) > 1e-10) {
    if (n < 1e-12) throw std::invalid_argument("statevector: zero vector");
    state.renormalize();
  }
  return state;
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const Complex& a : amps_) sum += std::norm(a);
  return std::sqrt(sum);
}

void StateVector::renormalize() {
  const double n = norm();
  if (n < 1e-300) throw std::runtime_error("statevector: cannot normalize zero vector");
  for (Complex& a : amps_) a /= n;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits())
    throw std::invalid_argument("statevector: inner product size mismatch");
  Complex sum = 0.0;
  const auto va = a.amplitudes();
  const auto vb = b.amplitudes();
  for (std::size_t i = 0; i < va.size(); ++i) sum += std::conj(va[i]) * vb[i];
  return sum;
}

double overlap_magnitude(const StateVector& a, const StateVector& b) {
  return std::abs(inner_product(a, b));
}

double fidelity(const StateVector& a, const StateVector& b) {
  const double m = overlap_magnitude(a, b);
  return m * m;
}

}  // namespace qida
