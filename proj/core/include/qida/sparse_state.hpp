#pragma once

#include <complex>
#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "qida/statevector.hpp"

namespace qida {

/// Sparse Slater-determinant expansion: occupation bitstrings with complex
/// amplitudes, truncated to the largest-magnitude entries and renormalized.
class SparseState {
 public:
  static constexpr double kDefaultCutoff = 1e-12;
  static constexpr std::size_t kDefaultMaxDeterminants = 100000;

  struct Entry {
    std::uint64_t bits;
    Complex amplitude;
  };

  /// Builds from raw (bitstring, amplitude) pairs: drops entries below
  /// `cutoff`, keeps the `max_determinants` largest by magnitude, renormalizes.
  static SparseState from_entries(int n_qubits, std::vector<Entry> entries,
                                  double cutoff = kDefaultCutoff,
                                  std::size_t max_determinants = kDefaultMaxDeterminants);

  /// Parses the determinant file format: header `nqubits K`, then K records
  /// `bitstring re [im]`. In a bitstring the leftmost character is the
  /// highest qubit index.
  static SparseState load(std::istream& in, double cutoff = kDefaultCutoff,
                          std::size_t max_determinants = kDefaultMaxDeterminants);
  static SparseState load_file(const std::string& path, double cutoff = kDefaultCutoff,
                               std::size_t max_determinants = kDefaultMaxDeterminants);

  static SparseState from_statevector(const StateVector& state,
                                      double cutoff = kDefaultCutoff,
                                      std::size_t max_determinants = kDefaultMaxDeterminants);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  StateVector to_statevector() const;

 private:
  SparseState(int n_qubits, std::vector<Entry> entries)
      : n_qubits_(n_qubits), entries_(std::move(entries)) {}
  int n_qubits_;
  std::vector<Entry> entries_;  // sorted by bitstring
};

}  // namespace qida
