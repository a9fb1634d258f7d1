#include "qida/qmi.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace qida {

namespace {

constexpr double kTwoLn2 = 2.0 * 0.69314718055994530942;

void check_qubit(int q, int n) {
  if (q < 0 || q >= n) throw std::out_of_range("qmi: qubit index out of range");
}

// Accumulates rho[b, b'] = sum over groups of amp[b] * conj(amp[b']), where a
// group collects the amplitudes of bitstrings identical outside the traced
// qubits. Hash grouping keeps the sparse path linear in the determinant count.
template <typename EntryFn>
Eigen::MatrixXcd grouped_rdm(int dim, std::uint64_t keep_mask_low,
                             std::uint64_t keep_mask_high, const EntryFn& for_each_entry) {
  const std::uint64_t drop_mask = ~(keep_mask_low | keep_mask_high);
  std::unordered_map<std::uint64_t, std::array<Complex, 4>> groups;
  for_each_entry([&](std::uint64_t bits, Complex amp) {
    const int low = (bits & keep_mask_low) ? 1 : 0;
    const int high = (bits & keep_mask_high) ? 1 : 0;
    auto& slot = groups[bits & drop_mask];
    slot[low + 2 * high] += amp;
  });
  Eigen::MatrixXcd rho = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [key, amps] : groups)
    for (int r = 0; r < dim; ++r)
      for (int c = 0; c < dim; ++c) rho(r, c) += amps[r] * std::conj(amps[c]);
  return rho;
}

template <typename EntryFn>
Rdm rdm_one(int n_qubits, int u, const EntryFn& for_each_entry) {
  check_qubit(u, n_qubits);
  Rdm rdm{grouped_rdm(2, std::uint64_t{1} << u, 0, for_each_entry)};
  rdm.validate();
  return rdm;
}

template <typename EntryFn>
Rdm rdm_two(int n_qubits, int u, int v, const EntryFn& for_each_entry) {
  check_qubit(u, n_qubits);
  check_qubit(v, n_qubits);
  if (u == v) throw std::invalid_argument("qmi: two-qubit rdm needs distinct qubits");
  Rdm rdm{grouped_rdm(4, std::uint64_t{1} << u, std::uint64_t{1} << v, for_each_entry)};
  rdm.validate();
  return rdm;
}

auto sparse_entries(const SparseState& state) {
  return [&state](auto&& fn) {
    for (const auto& e : state.entries()) fn(e.bits, e.amplitude);
  };
}

auto dense_entries(const StateVector& state) {
  return [&state](auto&& fn) {
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i)
      if (amps[i] != Complex{0, 0}) fn(i, amps[i]);
  };
}

template <typename EntryFn>
QmiMatrix qmi_from_entries(int n_qubits, const EntryFn& for_each_entry) {
  if (n_qubits < 2) throw std::invalid_argument("qmi: need at least 2 qubits");
  std::vector<double> s1(n_qubits);
  for (int u = 0; u < n_qubits; ++u)
    s1[u] = von_neumann_entropy(rdm_one(n_qubits, u, for_each_entry));
  Eigen::MatrixXd values = Eigen::MatrixXd::Zero(n_qubits, n_qubits);
  for (int u = 0; u < n_qubits; ++u)
    for (int v = u + 1; v < n_qubits; ++v) {
      const double s_uv = von_neumann_entropy(rdm_two(n_qubits, u, v, for_each_entry));
      const double i_uv = s1[u] + s1[v] - s_uv;
      values(u, v) = i_uv;
      values(v, u) = i_uv;
    }
  return QmiMatrix(n_qubits, std::move(values));
}

}  // namespace

void Rdm::validate(double tol) const {
  const auto rows = matrix.rows();
  if ((rows != 2 && rows != 4) || matrix.cols() != rows)
    throw std::invalid_argument("rdm: matrix must be 2x2 or 4x4");
  if ((matrix - matrix.adjoint()).cwiseAbs().maxCoeff() > tol)
    throw std::runtime_error("rdm: matrix is not Hermitian");
  if (std::abs(matrix.trace().real() - 1.0) > tol || std::abs(matrix.trace().imag()) > tol)
    throw std::runtime_error("rdm: trace differs from 1");
}

QmiMatrix::QmiMatrix(int n_qubits, Eigen::MatrixXd values)
    : n_qubits_(n_qubits), values_(std::move(values)) {
  if (values_.rows() != n_qubits_ || values_.cols() != n_qubits_)
    throw std::invalid_argument("qmi: matrix dimension mismatch");
  for (int u = 0; u < n_qubits_; ++u) {
    if (values_(u, u) != 0.0) throw std::invalid_argument("qmi: diagonal must be zero");
    for (int v = 0; v < n_qubits_; ++v) {
      if (values_(u, v) != values_(v, u))
        throw std::invalid_argument("qmi: matrix must be symmetric");
      if (values_(u, v) < -1e-9 || values_(u, v) > kTwoLn2 + 1e-9)
        throw std::invalid_argument("qmi: entry outside [0, 2 ln 2]");
      // numerical dust from entropy differences is clamped to zero
      if (values_(u, v) < 0.0) values_(u, v) = 0.0;
    }
  }
}

double QmiMatrix::max_value() const {
  return values_.size() == 0 ? 0.0 : values_.maxCoeff();
}

std::vector<std::tuple<int, int, double>> QmiMatrix::sorted_pairs() const {
  std::vector<std::tuple<int, int, double>> pairs;
  for (int u = 0; u < n_qubits_; ++u)
    for (int v = u + 1; v < n_qubits_; ++v) pairs.emplace_back(u, v, values_(u, v));
  std::sort(pairs.begin(), pairs.end(), [](const auto& a, const auto& b) {
    if (std::get<2>(a) != std::get<2>(b)) return std::get<2>(a) > std::get<2>(b);
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  return pairs;
}

Rdm one_qubit_rdm(const SparseState& state, int u) {
  return rdm_one(state.n_qubits(), u, sparse_entries(state));
}

Rdm one_qubit_rdm(const StateVector& state, int u) {
  return rdm_one(state.n_qubits(), u, dense_entries(state));
}

Rdm two_qubit_rdm(const SparseState& state, int u, int v) {
  return rdm_two(state.n_qubits(), u, v, sparse_entries(state));
}

Rdm two_qubit_rdm(const StateVector& state, int u, int v) {
  return rdm_two(state.n_qubits(), u, v, dense_entries(state));
}

double von_neumann_entropy(const Rdm& rdm) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rdm.matrix);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("von_neumann_entropy: eigensolver failed");
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    double lambda = solver.eigenvalues()(i);
    if (lambda < -1e-10)
      throw std::runtime_error("von_neumann_entropy: eigenvalue " + std::to_string(lambda) +
                               " below -1e-10");
    lambda = std::clamp(lambda, 0.0, 1.0);
    if (lambda > 0.0) entropy -= lambda * std::log(lambda);
  }
  return std::max(entropy, 0.0);
}

QmiMatrix qmi_matrix(const SparseState& state) {
  return qmi_from_entries(state.n_qubits(), sparse_entries(state));
}

QmiMatrix qmi_matrix(const StateVector& state) {
  return qmi_from_entries(state.n_qubits(), dense_entries(state));
}

}  // namespace qida
