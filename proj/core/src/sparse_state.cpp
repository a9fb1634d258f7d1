#include "qida/sparse_state.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qida {

SparseState SparseState::from_entries(int n_qubits, std::vector<Entry> entries,
                                      double cutoff, std::size_t max_determinants) {
  if (n_qubits < 1 || n_qubits > 64)
    throw std::invalid_argument("sparse_state: n_qubits must be in [1, 64]");
  if (max_determinants == 0)
    throw std::invalid_argument("sparse_state: max_determinants must be positive");

  // merge duplicate bitstrings before filtering
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.bits < b.bits; });
  std::vector<Entry> merged;
  merged.reserve(entries.size());
  for (const Entry& e : entries) {
    if (n_qubits < 64 && (e.bits >> n_qubits))
      throw std::invalid_argument("sparse_state: bitstring wider than register");
    if (!merged.empty() && merged.back().bits == e.bits)
      merged.back().amplitude += e.amplitude;
    else
      merged.push_back(e);
  }

  std::erase_if(merged, [&](const Entry& e) { return std::abs(e.amplitude) < cutoff; });
  if (merged.size() > max_determinants) {
    // keep the max_determinants largest amplitudes (ties by bitstring order)
    std::stable_sort(merged.begin(), merged.end(), [](const Entry& a, const Entry& b) {
      return std::abs(a.amplitude) > std::abs(b.amplitude);
    });
    merged.resize(max_determinants);
    std::sort(merged.begin(), merged.end(),
              [](const Entry& a, const Entry& b) { return a.bits < b.bits; });
  }
  if (merged.empty())
    throw std::runtime_error("sparse_state: no determinants survive the cutoff");

  double norm2 = 0.0;
  for (const Entry& e : merged) norm2 += std::norm(e.amplitude);
  const double inv = 1.0 / std::sqrt(norm2);
  for (Entry& e : merged) e.amplitude *= inv;

  return SparseState(n_qubits, std::move(merged));
}

SparseState SparseState::load(std::istream& in, double cutoff, std::size_t max_determinants) {
  std::string line;
  int line_no = 0;
  int n_qubits = -1;
  std::size_t declared = 0;
  std::vector<Entry> entries;

  auto fail = [&](const std::string& what) -> void {
    throw std::runtime_error("determinant file: line " + std::to_string(line_no) + ": " + what);
  };

  // header: `nqubits K`
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    if (!(fields >> n_qubits >> declared)) {
      std::string probe;
      if (std::istringstream(line) >> probe) fail("malformed header, expected `nqubits K`");
      continue;
    }
    break;
  }
  if (n_qubits < 1) throw std::runtime_error("determinant file: missing or invalid header");

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string bitstring;
    if (!(fields >> bitstring)) continue;
    if (static_cast<int>(bitstring.size()) != n_qubits)
      fail("bitstring length " + std::to_string(bitstring.size()) +
           " does not match nqubits=" + std::to_string(n_qubits));
    std::uint64_t bits = 0;
    for (char c : bitstring) {
      // leftmost character = highest qubit index
      if (c != '0' && c != '1') fail("bitstring must contain only 0/1");
      bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
    }
    double re, im = 0.0;
    if (!(fields >> re)) fail("missing coefficient");
    fields >> im;
    entries.push_back({bits, Complex(re, im)});
  }
  if (entries.size() != declared)
    throw std::runtime_error("determinant file: header declared " + std::to_string(declared) +
                             " records, found " + std::to_string(entries.size()));
  return from_entries(n_qubits, std::move(entries), cutoff, max_determinants);
}

SparseState SparseState::load_file(const std::string& path, double cutoff,
                                   std::size_t max_determinants) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("determinant file: cannot open " + path);
  return load(in, cutoff, max_determinants);
}

SparseState SparseState::from_statevector(const StateVector& state, double cutoff,
                                          std::size_t max_determinants) {
  std::vector<Entry> entries;
  const auto amps = state.amplitudes();
  for (std::uint64_t i = 0; i < amps.size(); ++i)
    if (std::abs(amps[i]) >= cutoff) entries.push_back({i, amps[i]});
  return from_entries(state.n_qubits(), std::move(entries), cutoff, max_determinants);
}

StateVector SparseState::to_statevector() const {
  if (n_qubits_ > 30) throw std::invalid_argument("sparse_state: too wide for a dense vector");
  std::vector<Complex> amps(std::size_t{1} << n_qubits_, Complex{0, 0});
  for (const Entry& e : entries_) amps[e.bits] = e.amplitude;
  return StateVector::from_amplitudes(n_qubits_, std::move(amps));
}

}  // namespace qida
