#include "qida/integrals.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qida {

namespace {

[[noreturn]] void parse_fail(int line_no, const std::string& line, const std::string& what) {
  throw std::runtime_error("fcidump: line " + std::to_string(line_no) + ": " + what +
                           " (\"" + line + "\")");
}

// Pulls KEY=value integer assignments out of a namelist fragment.
void scan_header_tokens(const std::string& line, int line_no, int& norb, int& nelec, int& ms2) {
  std::string upper = line;
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  for (char& c : upper)
    if (c == ',' || c == '=') c = ' ';
  std::istringstream tokens(upper);
  std::string tok;
  std::string pending_key;
  while (tokens >> tok) {
    if (tok == "NORB" || tok == "NELEC" || tok == "MS2") {
      pending_key = tok;
      continue;
    }
    if (pending_key.empty()) continue;
    try {
      const int value = std::stoi(tok);
      if (pending_key == "NORB") norb = value;
      else if (pending_key == "NELEC") nelec = value;
      else ms2 = value;
    } catch (const std::exception&) {
      parse_fail(line_no, line, "non-numeric value for " + pending_key);
    }
    pending_key.clear();
  }
}

}  // namespace

double MolecularIntegrals::one_body(int i, int j) const {
  return h[static_cast<std::size_t>(i) * n_spatial_orbitals + j];
}

double MolecularIntegrals::two_body_chemist(int i, int j, int k, int l) const {
  const std::size_t n = static_cast<std::size_t>(n_spatial_orbitals);
  return g[((static_cast<std::size_t>(i) * n + j) * n + k) * n + l];
}

void MolecularIntegrals::set_one_body(int i, int j, double value) {
  const std::size_t n = static_cast<std::size_t>(n_spatial_orbitals);
  h[static_cast<std::size_t>(i) * n + j] = value;
  h[static_cast<std::size_t>(j) * n + i] = value;
}

void MolecularIntegrals::set_two_body_chemist(int i, int j, int k, int l, double value) {
  const std::size_t n = static_cast<std::size_t>(n_spatial_orbitals);
  const int idx[8][4] = {{i, j, k, l}, {j, i, k, l}, {i, j, l, k}, {j, i, l, k},
                         {k, l, i, j}, {l, k, i, j}, {k, l, j, i}, {l, k, j, i}};
  for (const auto& p : idx)
    g[((static_cast<std::size_t>(p[0]) * n + p[1]) * n + p[2]) * n + p[3]] = value;
}

std::uint64_t MolecularIntegrals::hartree_fock_bitstring() const {
  std::uint64_t bits = 0;
  for (int i = 0; i < n_alpha(); ++i) bits |= std::uint64_t{1} << i;
  for (int i = 0; i < n_beta(); ++i) bits |= std::uint64_t{1} << (n_spatial_orbitals + i);
  return bits;
}

void MolecularIntegrals::validate() const {
  if (n_spatial_orbitals < 1)
    throw std::invalid_argument("integrals: n_spatial_orbitals must be positive");
  if (n_electrons < 1 || n_electrons > 2 * n_spatial_orbitals)
    throw std::invalid_argument("integrals: n_electrons out of range");
  if ((n_electrons + spin_multiplicity) % 2 != 0 || n_alpha() < 0 || n_beta() < 0 ||
      n_alpha() > n_spatial_orbitals || n_beta() > n_spatial_orbitals)
    throw std::invalid_argument("integrals: inconsistent MS2 / NELEC combination");
  const std::size_t n = static_cast<std::size_t>(n_spatial_orbitals);
  if (h.size() != n * n || g.size() != n * n * n * n)
    throw std::invalid_argument("integrals: tensor sizes do not match n_spatial_orbitals");
}

MolecularIntegrals parse_fcidump(std::istream& in) {
  MolecularIntegrals mo;
  std::string line;
  int line_no = 0;
  bool header_done = false;
  bool header_seen = false;
  int norb = -1, nelec = -1, ms2 = 0;

  while (!header_done && std::getline(in, line)) {
    ++line_no;
    std::string trimmed = line;
    trimmed.erase(0, trimmed.find_first_not_of(" \t\r"));
    if (trimmed.empty()) continue;
    std::string upper = trimmed;
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    if (!header_seen) {
      if (upper.rfind("&FCIDUMP", 0) != 0)
        parse_fail(line_no, line, "expected &FCIDUMP namelist header");
      header_seen = true;
    }
    scan_header_tokens(trimmed, line_no, norb, nelec, ms2);
    if (upper.find("&END") != std::string::npos ||
        upper.find('/') != std::string::npos)
      header_done = true;
  }
  if (!header_done) throw std::runtime_error("fcidump: header never terminated with &END or /");
  if (norb < 1) throw std::runtime_error("fcidump: header missing a valid NORB");
  if (nelec < 0) throw std::runtime_error("fcidump: header missing a valid NELEC");

  mo.n_spatial_orbitals = norb;
  mo.n_electrons = nelec;
  mo.spin_multiplicity = ms2;
  const std::size_t n = static_cast<std::size_t>(norb);
  mo.h.assign(n * n, 0.0);
  mo.g.assign(n * n * n * n, 0.0);

  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    double value;
    long i, j, k, l;
    if (!(fields >> value)) {
      std::string probe;
      if (std::istringstream(line) >> probe)  // non-blank line that is not a number
        parse_fail(line_no, line, "non-numeric integral value");
      continue;  // blank line
    }
    if (!(fields >> i >> j >> k >> l))
      parse_fail(line_no, line, "expected four orbital indices after the value");
    if (i < 0 || j < 0 || k < 0 || l < 0 || i > norb || j > norb || k > norb || l > norb)
      parse_fail(line_no, line, "orbital index exceeds NORB=" + std::to_string(norb));

    if (i == 0 && j == 0 && k == 0 && l == 0) {
      mo.core_energy = value;
    } else if (k == 0 && l == 0) {
      if (j == 0) continue;  // orbital-energy record
      mo.set_one_body(static_cast<int>(i - 1), static_cast<int>(j - 1), value);
    } else if (i == 0 || j == 0 || k == 0 || l == 0) {
      parse_fail(line_no, line, "partially zero index quadruple");
    } else {
      mo.set_two_body_chemist(static_cast<int>(i - 1), static_cast<int>(j - 1),
                              static_cast<int>(k - 1), static_cast<int>(l - 1), value);
    }
  }

  mo.validate();
  return mo;
}

MolecularIntegrals parse_fcidump_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fcidump: cannot open " + path);
  return parse_fcidump(in);
}

}  // namespace qida
