#include "qida/hamiltonians.hpp"

#include <stdexcept>

namespace qida {

PauliSum jw_ladder(int orbital_index, LadderKind kind, int n_qubits) {
  if (orbital_index < 0 || orbital_index >= n_qubits)
    throw std::out_of_range("jw_ladder: orbital index out of range");
  // (X -+ iY)/2 on the target, Z parity string below it
  PauliString x_term(n_qubits);
  PauliString y_term(n_qubits);
  for (int j = 0; j < orbital_index; ++j) {
    x_term.set_letter(j, PauliLetter::Z);
    y_term.set_letter(j, PauliLetter::Z);
  }
  x_term.set_letter(orbital_index, PauliLetter::X);
  y_term.set_letter(orbital_index, PauliLetter::Y);
  const Complex y_coeff =
      kind == LadderKind::Creation ? Complex(0, -0.5) : Complex(0, 0.5);
  return PauliSum::from_terms(n_qubits, {{0.5, x_term}, {y_coeff, y_term}});
}

PauliSum build_qubit_hamiltonian(const MolecularIntegrals& mo) {
  mo.validate();
  const int n = mo.n_spatial_orbitals;
  const int n_q = mo.n_qubits();
  if (n_q > 64) throw std::invalid_argument("build_qubit_hamiltonian: too many qubits");

  // spatial orbital p with spin sigma -> qubit p + sigma * n
  std::vector<PauliSum> create, destroy;
  create.reserve(n_q);
  destroy.reserve(n_q);
  for (int q = 0; q < n_q; ++q) {
    create.push_back(jw_ladder(q, LadderKind::Creation, n_q));
    destroy.push_back(jw_ladder(q, LadderKind::Annihilation, n_q));
  }

  PauliAccumulator acc(n_q);
  acc.add(PauliSum::identity(n_q, mo.core_energy));

  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      const double hpq = mo.one_body(p, q);
      if (hpq == 0.0) continue;
      for (int s = 0; s < 2; ++s)
        acc.add(create[p + s * n] * destroy[q + s * n], hpq);
    }

  // chemist two-body term: 1/2 (pq|rs) a+_{p,s1} a+_{r,s2} a_{s,s2} a_{q,s1}
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          const double gv = mo.two_body_chemist(p, q, r, s);
          if (gv == 0.0) continue;
          for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2) {
              const PauliSum op = create[p + s1 * n] * create[r + s2 * n] *
                                  destroy[s + s2 * n] * destroy[q + s1 * n];
              acc.add(op, 0.5 * gv);
            }
        }

  return acc.take();
}

PauliSum heisenberg_hamiltonian(int n_qubits, double coupling, LatticeTopology topology) {
  if (n_qubits < 2)
    throw std::invalid_argument("heisenberg_hamiltonian: need at least 2 qubits");
  PauliAccumulator acc(n_qubits);
  // a 2-site ring degenerates to the single chain bond
  const int n_edges =
      (topology == LatticeTopology::Ring && n_qubits > 2) ? n_qubits : n_qubits - 1;
  for (int e = 0; e < n_edges; ++e) {
    const int u = e;
    const int v = (e + 1) % n_qubits;
    for (PauliLetter l : {PauliLetter::X, PauliLetter::Y, PauliLetter::Z}) {
      PauliString op(n_qubits);
      op.set_letter(u, l);
      op.set_letter(v, l);
      acc.add(coupling, op);
    }
  }
  return acc.take();
}

std::uint64_t neel_bitstring(int n_qubits) {
  std::uint64_t bits = 0;
  for (int q = 0; q < n_qubits; q += 2) bits |= std::uint64_t{1} << q;
  return bits;
}

}  // namespace qida
