#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

namespace qida {

/// One- and two-electron integrals over spatial orbitals, as read from an
/// FCIDUMP file. Two-electron integrals are kept in chemist notation (ij|kl)
/// with the full 8-fold permutational symmetry expanded; unlisted entries
/// are zero.
struct MolecularIntegrals {
  int n_spatial_orbitals = 0;
  int n_electrons = 0;
  int spin_multiplicity = 0;  // MS2 value from the FCIDUMP header (2*Sz)
  double core_energy = 0.0;
  std::vector<double> h;  // n*n, row-major
  std::vector<double> g;  // n^4, chemist (ij|kl)

  double one_body(int i, int j) const;
  double two_body_chemist(int i, int j, int k, int l) const;
  void set_one_body(int i, int j, double value);          // writes h_ij and h_ji
  void set_two_body_chemist(int i, int j, int k, int l,   // writes all 8 images
                            double value);

  int n_alpha() const { return (n_electrons + spin_multiplicity) / 2; }
  int n_beta() const { return (n_electrons - spin_multiplicity) / 2; }
  int n_qubits() const { return 2 * n_spatial_orbitals; }

  /// Hartree-Fock occupation: lowest n_alpha orbitals in the alpha block
  /// (qubits 0..n-1), lowest n_beta in the beta block (qubits n..2n-1).
  std::uint64_t hartree_fock_bitstring() const;

  void validate() const;
};

/// Parses FCIDUMP text: a namelist header carrying NORB/NELEC/MS2 followed by
/// `value i j k l` records (1-based, chemist notation, core energy at 0 0 0 0,
/// `value i 0 0 0` orbital-energy records are skipped).
MolecularIntegrals parse_fcidump(std::istream& in);
MolecularIntegrals parse_fcidump_file(const std::string& path);

}  // namespace qida
