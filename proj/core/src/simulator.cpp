#include "qida/simulator.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace qida {

namespace {

constexpr double kSqrtHalf = 0.70710678118654752440;

Eigen::Matrix4cd kron2(const Eigen::Matrix2cd& high, const Eigen::Matrix2cd& low) {
  // index = bit_low + 2 * bit_high
  Eigen::Matrix4cd out;
  for (int bh = 0; bh < 2; ++bh)
    for (int bl = 0; bl < 2; ++bl)
      for (int ch = 0; ch < 2; ++ch)
        for (int cl = 0; cl < 2; ++cl)
          out(bl + 2 * bh, cl + 2 * ch) = high(bh, ch) * low(bl, cl);
  return out;
}

Eigen::Matrix2cd su2_zyz(double a, double b, double c) {
  return rz_matrix(a) * ry_matrix(b) * rz_matrix(c);
}

Eigen::Matrix2cd su2_zyz_derivative(double a, double b, double c, int which) {
  switch (which) {
    case 0: return rz_derivative(a) * ry_matrix(b) * rz_matrix(c);
    case 1: return rz_matrix(a) * ry_derivative(b) * rz_matrix(c);
    default: return rz_matrix(a) * ry_matrix(b) * rz_derivative(c);
  }
}

void check_match(const StateVector& state, const PauliSum& obs) {
  if (state.n_qubits() != obs.n_qubits())
    throw std::invalid_argument("simulator: state / observable qubit count mismatch");
}

// P|i> = phase(i) |i ^ x_mask>; phase(i) = i^{#Y} * (-1)^{popcount(i & z_mask)}
Complex term_phase(const PauliString& op, std::uint64_t index) {
  static constexpr Complex kI[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const int ny = std::popcount(op.x_mask() & op.z_mask());
  const int sign = std::popcount(index & op.z_mask()) & 1;
  Complex phase = kI[ny & 3];
  return sign ? -phase : phase;
}

}  // namespace

Eigen::Matrix2cd ry_matrix(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << c, -s, s, c;
  return m;
}

Eigen::Matrix2cd rz_matrix(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = std::exp(Complex(0, -theta / 2));
  m(1, 1) = std::exp(Complex(0, theta / 2));
  return m;
}

Eigen::Matrix2cd ry_derivative(double theta) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  Eigen::Matrix2cd m;
  m << -s / 2, -c / 2, c / 2, -s / 2;
  return m;
}

Eigen::Matrix2cd rz_derivative(double theta) {
  Eigen::Matrix2cd m = Eigen::Matrix2cd::Zero();
  m(0, 0) = Complex(0, -0.5) * std::exp(Complex(0, -theta / 2));
  m(1, 1) = Complex(0, 0.5) * std::exp(Complex(0, theta / 2));
  return m;
}

const Eigen::Matrix4cd& magic_basis() {
  static const Eigen::Matrix4cd m = [] {
    const Complex i{0, 1};
    Eigen::Matrix4cd out;
    out << 1, 0, 0, i,
           0, i, 1, 0,
           0, i, -1, 0,
           1, 0, 0, -i;
    return Eigen::Matrix4cd(kSqrtHalf * out);
  }();
  return m;
}

Eigen::Matrix4cd so4_unitary(std::span<const double, 6> p) {
  const Eigen::Matrix2cd a = su2_zyz(p[0], p[1], p[2]);
  const Eigen::Matrix2cd b = su2_zyz(p[3], p[4], p[5]);
  const Eigen::Matrix4cd& m = magic_basis();
  return m.adjoint() * kron2(b, a) * m;
}

Eigen::Matrix4cd so4_derivative(std::span<const double, 6> p, int which) {
  if (which < 0 || which >= 6) throw std::out_of_range("so4_derivative: bad index");
  Eigen::Matrix2cd a, b;
  if (which < 3) {
    a = su2_zyz_derivative(p[0], p[1], p[2], which);
    b = su2_zyz(p[3], p[4], p[5]);
  } else {
    a = su2_zyz(p[0], p[1], p[2]);
    b = su2_zyz_derivative(p[3], p[4], p[5], which - 3);
  }
  const Eigen::Matrix4cd& m = magic_basis();
  return m.adjoint() * kron2(b, a) * m;
}

void apply_single_qubit(std::span<Complex> amps, int qubit, const Eigen::Matrix2cd& m) {
  const std::size_t stride = std::size_t{1} << qubit;
  const std::size_t dim = amps.size();
  for (std::size_t base = 0; base < dim; base += 2 * stride)
    for (std::size_t off = 0; off < stride; ++off) {
      const std::size_t i0 = base + off;
      const std::size_t i1 = i0 + stride;
      const Complex a0 = amps[i0], a1 = amps[i1];
      amps[i0] = m(0, 0) * a0 + m(0, 1) * a1;
      amps[i1] = m(1, 0) * a0 + m(1, 1) * a1;
    }
}

void apply_two_qubit(std::span<Complex> amps, int qubit_low, int qubit_high,
                     const Eigen::Matrix4cd& m) {
  const std::uint64_t bl = std::uint64_t{1} << qubit_low;
  const std::uint64_t bh = std::uint64_t{1} << qubit_high;
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i) {
    if (i & (bl | bh)) continue;
    const std::uint64_t idx[4] = {i, i | bl, i | bh, i | bl | bh};
    Complex v[4];
    for (int k = 0; k < 4; ++k) v[k] = amps[idx[k]];
    for (int r = 0; r < 4; ++r)
      amps[idx[r]] = m(r, 0) * v[0] + m(r, 1) * v[1] + m(r, 2) * v[2] + m(r, 3) * v[3];
  }
}

void apply_cnot(std::span<Complex> amps, int control, int target) {
  const std::uint64_t bc = std::uint64_t{1} << control;
  const std::uint64_t bt = std::uint64_t{1} << target;
  const std::uint64_t dim = amps.size();
  for (std::uint64_t i = 0; i < dim; ++i)
    if ((i & bc) && !(i & bt)) std::swap(amps[i], amps[i | bt]);
}

namespace {

void apply_gate_impl(std::span<Complex> amps, const GateOp& gate,
                     std::span<const double> params, bool inverse) {
  switch (gate.kind) {
    case GateKind::Ry: {
      const double t = params[gate.slots[0]];
      apply_single_qubit(amps, gate.qubits[0], ry_matrix(inverse ? -t : t));
      break;
    }
    case GateKind::Rz: {
      const double t = params[gate.slots[0]];
      apply_single_qubit(amps, gate.qubits[0], rz_matrix(inverse ? -t : t));
      break;
    }
    case GateKind::Cnot:
      apply_cnot(amps, gate.qubits[0], gate.qubits[1]);
      break;
    case GateKind::So4: {
      std::array<double, 6> p;
      for (int i = 0; i < 6; ++i) p[i] = params[gate.slots[i]];
      Eigen::Matrix4cd u = so4_unitary(p);
      if (inverse) u = Eigen::Matrix4cd(u.adjoint());
      apply_two_qubit(amps, gate.qubits[0], gate.qubits[1], u);
      break;
    }
  }
}

}  // namespace

void apply_gate(std::span<Complex> amps, const GateOp& gate, std::span<const double> params) {
  apply_gate_impl(amps, gate, params, false);
}

void unapply_gate(std::span<Complex> amps, const GateOp& gate, std::span<const double> params) {
  apply_gate_impl(amps, gate, params, true);
}

StateVector apply_circuit(const Circuit& circuit, std::span<const double> params) {
  return apply_circuit(circuit, params,
                       StateVector::basis_state(circuit.n_qubits, circuit.reference_bitstring));
}

StateVector apply_circuit(const Circuit& circuit, std::span<const double> params,
                          const StateVector& initial) {
  if (static_cast<int>(params.size()) != circuit.n_parameters)
    throw std::invalid_argument("simulator: parameter vector length mismatch");
  if (initial.n_qubits() != circuit.n_qubits)
    throw std::invalid_argument("simulator: initial state size mismatch");
  StateVector state = initial;
  for (const GateOp& gate : circuit.gates)
    apply_gate(state.mutable_amplitudes(), gate, params);
  return state;
}

double expectation(const StateVector& state, const PauliSum& observable) {
  check_match(state, observable);
  const auto amps = state.amplitudes();
  Complex total = 0.0;
  for (const PauliTerm& term : observable.terms()) {
    const std::uint64_t x = term.op.x_mask();
    Complex acc = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
      const Complex a = amps[i];
      if (a == Complex{0, 0}) continue;
      acc += std::conj(amps[i ^ x]) * term_phase(term.op, i) * a;
    }
    total += term.coefficient * acc;
  }
  if (std::abs(total.imag()) > 1e-8)
    throw std::runtime_error("expectation: imaginary residue " +
                             std::to_string(total.imag()) + " exceeds 1e-8");
  return total.real();
}

std::vector<Complex> apply_observable(const PauliSum& observable,
                                      std::span<const Complex> amps) {
  if ((std::size_t{1} << observable.n_qubits()) != amps.size())
    throw std::invalid_argument("simulator: observable / amplitude size mismatch");
  std::vector<Complex> out(amps.size(), Complex{0, 0});
  for (const PauliTerm& term : observable.terms()) {
    const std::uint64_t x = term.op.x_mask();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
      const Complex a = amps[i];
      if (a == Complex{0, 0}) continue;
      out[i ^ x] += term.coefficient * term_phase(term.op, i) * a;
    }
  }
  return out;
}

Eigen::MatrixXcd to_dense_matrix(const PauliSum& observable) {
  const int n = observable.n_qubits();
  if (n > 16) throw std::invalid_argument("to_dense_matrix: more than 16 qubits");
  const std::uint64_t dim = std::uint64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(dim),
                                              static_cast<Eigen::Index>(dim));
  for (const PauliTerm& term : observable.terms()) {
    const std::uint64_t x = term.op.x_mask();
    for (std::uint64_t col = 0; col < dim; ++col)
      m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) +=
          term.coefficient * term_phase(term.op, col);
  }
  return m;
}

GroundState exact_ground_state(const PauliSum& observable) {
  const int n = observable.n_qubits();
  if (n > 16) throw std::invalid_argument("exact_ground_state: more than 16 qubits");
  const Eigen::MatrixXcd m = to_dense_matrix(observable);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("exact_ground_state: eigensolver failed");
  const Eigen::VectorXcd col = solver.eigenvectors().col(0);
  std::vector<Complex> amps(col.data(), col.data() + col.size());
  return {solver.eigenvalues()(0), StateVector::from_amplitudes(n, std::move(amps))};
}

}  // namespace qida
