#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qida/pauli.hpp"

namespace qida {

/// 100 * (e_vqe - e_ref) / (e_exact - e_ref); negative when the run lands
/// above the reference while the exact energy lies below it.
double correlation_energy_pct(double e_vqe, double e_ref, double e_exact);

/// Mean absolute deviation of the correlation energies from the best
/// (maximum) entry; the best run contributes zero.
double mced(std::span<const double> epsilons);

struct SymmetryOperators {
  PauliSum sz;
  PauliSum s2;
  PauliSum n_e;
};

/// Jordan-Wigner images of Sz = (N_alpha - N_beta)/2, S^2 = S-S+ + Sz(Sz+1)
/// and the particle number, on the alpha-then-beta qubit layout.
SymmetryOperators symmetry_operators(int n_spatial);

struct RunRecord {
  int run_id = 0;
  std::string ansatz_label;
  std::uint64_t seed = 0;
  double final_energy = 0.0;
  double epsilon = 0.0;  // percent, may be negative
  double fidelity = 0.0;
  double overlap = 0.0;  // raw |<gs|psi>|
  double sz = 0.0;
  double s2 = 0.0;
  double n_e = 0.0;
  int cnot_count = 0;
  bool converged = false;
  int n_iterations = 0;
};

struct SummaryStats {
  int n_runs = 0;
  double epsilon_avg = 0.0;
  double epsilon_std = 0.0;  // population standard deviation
  double epsilon_best = 0.0;
  double energy_avg = 0.0;
  double energy_best = 0.0;
  double mced_pct = 0.0;      // mean |eps_i - eps_best|
  double med_hartree = 0.0;   // mean |E_i - E_best|
  double fidelity_avg = 0.0;
  double fidelity_best = 0.0;
  double sz_avg = 0.0;
  double s2_avg = 0.0;
  double n_e_avg = 0.0;
  int cnot_count = 0;
};

/// Aggregates a batch of runs; correlation energies are recomputed from the
/// stored energies against the provided references.
SummaryStats summarize(std::span<const RunRecord> records, double e_ref, double e_exact);

}  // namespace qida
