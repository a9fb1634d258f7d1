#include "qida/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qida/hamiltonians.hpp"

namespace qida {

double correlation_energy_pct(double e_vqe, double e_ref, double e_exact) {
  const double denom = e_exact - e_ref;
  if (denom == 0.0)
    throw std::invalid_argument("correlation energy: exact and reference energies coincide");
  return 100.0 * (e_vqe - e_ref) / denom;
}

double mced(std::span<const double> epsilons) {
  if (epsilons.empty()) throw std::invalid_argument("mced: empty correlation-energy list");
  const double best = *std::max_element(epsilons.begin(), epsilons.end());
  double sum = 0.0;
  for (double e : epsilons) sum += std::abs(e - best);
  return sum / static_cast<double>(epsilons.size());
}

SymmetryOperators symmetry_operators(int n_spatial) {
  if (n_spatial < 1) throw std::invalid_argument("symmetry operators: need n_spatial >= 1");
  const int n_q = 2 * n_spatial;

  auto number_op = [&](int qubit) {
    // a+ a on one mode: (I - Z)/2
    PauliAccumulator acc(n_q);
    acc.add(PauliSum::identity(n_q, 0.5));
    acc.add(-0.5, PauliString::single(n_q, qubit, PauliLetter::Z));
    return acc.take();
  };

  PauliAccumulator sz_acc(n_q), ne_acc(n_q);
  for (int i = 0; i < n_spatial; ++i) {
    sz_acc.add(number_op(i), 0.5);
    sz_acc.add(number_op(i + n_spatial), -0.5);
    ne_acc.add(number_op(i));
    ne_acc.add(number_op(i + n_spatial));
  }
  const PauliSum sz = sz_acc.take();
  const PauliSum ne = ne_acc.take();

  // S- = sum_i a+_{i,beta} a_{i,alpha}, S+ = sum_i a+_{i,alpha} a_{i,beta}
  PauliAccumulator sminus_acc(n_q), splus_acc(n_q);
  for (int i = 0; i < n_spatial; ++i) {
    sminus_acc.add(jw_ladder(i + n_spatial, LadderKind::Creation, n_q) *
                   jw_ladder(i, LadderKind::Annihilation, n_q));
    splus_acc.add(jw_ladder(i, LadderKind::Creation, n_q) *
                  jw_ladder(i + n_spatial, LadderKind::Annihilation, n_q));
  }
  const PauliSum s2 = (sminus_acc.take() * splus_acc.take() + sz * sz + sz).simplified();

  return {sz, s2, ne};
}

SummaryStats summarize(std::span<const RunRecord> records, double e_ref, double e_exact) {
  if (records.empty()) throw std::invalid_argument("summarize: no run records");
  SummaryStats stats;
  stats.n_runs = static_cast<int>(records.size());
  stats.cnot_count = records.front().cnot_count;

  std::vector<double> epsilons;
  epsilons.reserve(records.size());
  double best_energy = records.front().final_energy;
  for (const RunRecord& r : records) {
    epsilons.push_back(correlation_energy_pct(r.final_energy, e_ref, e_exact));
    stats.energy_avg += r.final_energy;
    stats.fidelity_avg += r.fidelity;
    stats.sz_avg += r.sz;
    stats.s2_avg += r.s2;
    stats.n_e_avg += r.n_e;
    best_energy = std::min(best_energy, r.final_energy);
    stats.fidelity_best = std::max(stats.fidelity_best, r.fidelity);
  }
  const double n = static_cast<double>(records.size());
  stats.energy_avg /= n;
  stats.fidelity_avg /= n;
  stats.sz_avg /= n;
  stats.s2_avg /= n;
  stats.n_e_avg /= n;
  stats.energy_best = best_energy;

  for (double e : epsilons) stats.epsilon_avg += e;
  stats.epsilon_avg /= n;
  double var = 0.0;
  for (double e : epsilons) var += (e - stats.epsilon_avg) * (e - stats.epsilon_avg);
  stats.epsilon_std = std::sqrt(var / n);
  stats.epsilon_best = *std::max_element(epsilons.begin(), epsilons.end());
  stats.mced_pct = mced(epsilons);

  double med = 0.0;
  for (const RunRecord& r : records) med += std::abs(r.final_energy - best_energy);
  stats.med_hartree = med / n;

  // sanity: the best run can never sit far below the average
  if (stats.epsilon_best < stats.epsilon_avg - 5.0 * stats.epsilon_std - 1e-9)
    throw std::logic_error("summarize: inconsistent epsilon statistics");
  return stats;
}

}  // namespace qida
