#include "qida/vqe.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace qida {

namespace {

// platform-stable uniform doubles in [0, 1): top 53 bits of the generator
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::vector<double> uniform_vector(std::mt19937_64& rng, std::size_t n, double low,
                                   double high) {
  std::vector<double> out(n);
  for (double& x : out) x = low + (high - low) * uniform01(rng);
  return out;
}

StateVector reference_state(const Circuit& circuit) {
  return StateVector::basis_state(circuit.n_qubits, circuit.reference_bitstring);
}

Objective make_objective(const Circuit& circuit, const PauliSum& hamiltonian,
                         const StateVector& initial) {
  return [&circuit, &hamiltonian, initial](std::span<const double> x,
                                           std::span<double> grad_out) {
    const std::vector<double> g = gradient(circuit, x, hamiltonian, initial);
    for (std::size_t i = 0; i < g.size(); ++i) grad_out[i] = g[i];
    return energy(circuit, x, hamiltonian, initial);
  };
}

void append_trace(std::vector<TracePoint>& trace, const OptResult& run, int layer,
                  OptPhase phase) {
  for (std::size_t i = 0; i < run.energy_trace.size(); ++i)
    trace.push_back({layer, phase, static_cast<int>(i), run.energy_trace[i]});
}

}  // namespace

LayeredAnsatz LayeredAnsatz::from_plan(const LayerPlan& plan,
                                       std::uint64_t reference_bitstring) {
  plan.validate();
  LayeredAnsatz ansatz{Circuit(plan.n_qubits, reference_bitstring), {}, {}};
  for (const EntanglerMap& layer : plan.all_layers()) {
    const int slot_begin = ansatz.circuit.n_parameters;
    const int gate_begin = static_cast<int>(ansatz.circuit.gates.size());
    for (const auto& [u, v] : layer.pairs) ansatz.circuit.add_so4(u, v);
    ansatz.layer_slot_ranges.emplace_back(slot_begin, ansatz.circuit.n_parameters);
    ansatz.layer_gate_ranges.emplace_back(gate_begin,
                                          static_cast<int>(ansatz.circuit.gates.size()));
  }
  ansatz.circuit.validate();
  return ansatz;
}

Circuit LayeredAnsatz::layer_circuit(int layer) const {
  const auto [gate_begin, gate_end] = layer_gate_ranges.at(layer);
  const auto [slot_begin, slot_end] = layer_slot_ranges.at(layer);
  Circuit out(circuit.n_qubits, circuit.reference_bitstring);
  for (int g = gate_begin; g < gate_end; ++g) {
    GateOp op = circuit.gates[g];
    for (int i = 0; i < op.n_slots(); ++i) op.slots[i] -= slot_begin;
    out.gates.push_back(op);
  }
  out.n_parameters = slot_end - slot_begin;
  out.validate();
  return out;
}

Circuit LayeredAnsatz::prefix_circuit(int n_layers) const {
  if (n_layers < 0 || n_layers > this->n_layers())
    throw std::out_of_range("ansatz: prefix layer count out of range");
  Circuit out(circuit.n_qubits, circuit.reference_bitstring);
  if (n_layers > 0) {
    const int gate_end = layer_gate_ranges[n_layers - 1].second;
    out.gates.assign(circuit.gates.begin(), circuit.gates.begin() + gate_end);
    out.n_parameters = layer_slot_ranges[n_layers - 1].second;
  }
  out.validate();
  return out;
}

Circuit hea_circuit(int n_qubits, int depth, std::uint64_t reference_bitstring) {
  if (n_qubits < 2) throw std::invalid_argument("hea: need at least 2 qubits");
  if (depth < 1) throw std::invalid_argument("hea: depth must be >= 1");
  Circuit circuit(n_qubits, reference_bitstring);
  auto rotation_layer = [&] {
    for (int q = 0; q < n_qubits; ++q) {
      circuit.add_ry(q);
      circuit.add_rz(q);
    }
  };
  for (int d = 0; d < depth; ++d) {
    rotation_layer();
    for (int q = 0; q + 1 < n_qubits; ++q) circuit.add_cnot(q, q + 1);
  }
  rotation_layer();
  circuit.validate();
  return circuit;
}

double energy(const Circuit& circuit, std::span<const double> params,
              const PauliSum& hamiltonian) {
  return expectation(apply_circuit(circuit, params), hamiltonian);
}

double energy(const Circuit& circuit, std::span<const double> params,
              const PauliSum& hamiltonian, const StateVector& initial) {
  return expectation(apply_circuit(circuit, params, initial), hamiltonian);
}

std::vector<double> gradient(const Circuit& circuit, std::span<const double> params,
                             const PauliSum& hamiltonian) {
  return gradient(circuit, params, hamiltonian, reference_state(circuit));
}

std::vector<double> gradient(const Circuit& circuit, std::span<const double> params,
                             const PauliSum& hamiltonian, const StateVector& initial) {
  // reverse sweep: with |psi_k> the state after gate k and lambda_k the
  // observable-propagated costate, dE/dtheta = 2 Re <lambda_k| dU_k |psi_{k-1}>
  StateVector psi = apply_circuit(circuit, params, initial);
  std::vector<Complex> lambda = apply_observable(hamiltonian, psi.amplitudes());
  std::vector<double> grad(params.size(), 0.0);

  std::vector<Complex> work;
  for (auto it = circuit.gates.rbegin(); it != circuit.gates.rend(); ++it) {
    const GateOp& gate = *it;
    unapply_gate(psi.mutable_amplitudes(), gate, params);  // now |psi_{k-1}>

    if (gate.n_slots() > 0) {
      const auto psi_prev = psi.amplitudes();
      auto contract = [&](const std::vector<Complex>& dpsi) {
        Complex acc = 0.0;
        for (std::size_t i = 0; i < dpsi.size(); ++i) acc += std::conj(lambda[i]) * dpsi[i];
        return 2.0 * acc.real();
      };
      switch (gate.kind) {
        case GateKind::Ry: {
          work.assign(psi_prev.begin(), psi_prev.end());
          apply_single_qubit(work, gate.qubits[0], ry_derivative(params[gate.slots[0]]));
          grad[gate.slots[0]] += contract(work);
          break;
        }
        case GateKind::Rz: {
          work.assign(psi_prev.begin(), psi_prev.end());
          apply_single_qubit(work, gate.qubits[0], rz_derivative(params[gate.slots[0]]));
          grad[gate.slots[0]] += contract(work);
          break;
        }
        case GateKind::So4: {
          std::array<double, 6> p;
          for (int i = 0; i < 6; ++i) p[i] = params[gate.slots[i]];
          for (int i = 0; i < 6; ++i) {
            work.assign(psi_prev.begin(), psi_prev.end());
            apply_two_qubit(work, gate.qubits[0], gate.qubits[1], so4_derivative(p, i));
            grad[gate.slots[i]] += contract(work);
          }
          break;
        }
        default: break;
      }
    }
    unapply_gate(lambda, gate, params);
  }
  return grad;
}

OptResult minimize_energy(const Circuit& circuit, std::vector<double> initial_params,
                          const PauliSum& hamiltonian, const VqeConfig& config) {
  return minimize_energy(circuit, std::move(initial_params), hamiltonian, config,
                         reference_state(circuit));
}

OptResult minimize_energy(const Circuit& circuit, std::vector<double> initial_params,
                          const PauliSum& hamiltonian, const VqeConfig& config,
                          const StateVector& initial_state) {
  if (static_cast<int>(initial_params.size()) != circuit.n_parameters)
    throw std::invalid_argument("vqe: initial parameter count mismatch");
  return minimize(make_objective(circuit, hamiltonian, initial_state),
                  std::move(initial_params), config);
}

std::string phase_name(OptPhase phase) {
  switch (phase) {
    case OptPhase::Independent: return "independent";
    case OptPhase::Relaxation: return "relaxation";
    case OptPhase::Global: return "global";
  }
  return "?";
}

IncrementalResult incremental_vqe(const LayerPlan& plan, const PauliSum& hamiltonian,
                                  std::uint64_t reference_bitstring,
                                  const VqeConfig& config) {
  config.validate();
  if (plan.all_layers().empty()) throw std::invalid_argument("incremental_vqe: empty plan");
  const LayeredAnsatz ansatz = LayeredAnsatz::from_plan(plan, reference_bitstring);
  std::mt19937_64 rng(config.rng_seed);

  IncrementalResult out;
  std::vector<double> theta;  // relaxed parameters of the prefix circuit
  double previous_relaxed = 0.0;

  for (int layer = 0; layer < ansatz.n_layers(); ++layer) {
    const auto [slot_begin, slot_end] = ansatz.layer_slot_ranges[layer];
    const int n_new = slot_end - slot_begin;
    LayerRecord record{layer, 0.0, 0.0, 0, 0, false};

    if (layer == 0) {
      std::vector<double> init =
          uniform_vector(rng, static_cast<std::size_t>(n_new), 0.0, 2 * std::numbers::pi);
      OptResult run =
          minimize_energy(ansatz.prefix_circuit(1), std::move(init), hamiltonian, config);
      append_trace(out.trace, run, 0, OptPhase::Relaxation);
      theta = run.final_params;
      record.independent_energy = run.final_energy;
      record.relaxed_energy = run.final_energy;
      record.relaxed_iterations = run.n_iterations;
      out.result = std::move(run);
    } else {
      // independent phase: optimize only the new layer on top of the frozen
      // previous state
      const StateVector frozen =
          apply_circuit(ansatz.prefix_circuit(layer), theta,
                        StateVector::basis_state(plan.n_qubits, reference_bitstring));
      std::vector<double> init = uniform_vector(rng, static_cast<std::size_t>(n_new), 0.0,
                                                config.layer_init_halfwidth);
      const Circuit layer_only = ansatz.layer_circuit(layer);
      OptResult independent =
          minimize_energy(layer_only, std::move(init), hamiltonian, config, frozen);
      append_trace(out.trace, independent, layer, OptPhase::Independent);
      record.independent_energy = independent.final_energy;
      record.independent_iterations = independent.n_iterations;
      record.independent_raised_energy =
          independent.final_energy > previous_relaxed + 1e-9;

      // relaxation: full prefix circuit from the concatenated parameters
      std::vector<double> concatenated = theta;
      concatenated.insert(concatenated.end(), independent.final_params.begin(),
                          independent.final_params.end());
      OptResult relaxed = minimize_energy(ansatz.prefix_circuit(layer + 1),
                                          std::move(concatenated), hamiltonian, config);
      append_trace(out.trace, relaxed, layer, OptPhase::Relaxation);
      theta = relaxed.final_params;
      record.relaxed_energy = relaxed.final_energy;
      record.relaxed_iterations = relaxed.n_iterations;
      out.result = std::move(relaxed);
    }

    previous_relaxed = record.relaxed_energy;
    out.layers.push_back(record);
  }
  return out;
}

HeaResult hea_vqe(int n_qubits, int depth, const PauliSum& hamiltonian,
                  std::uint64_t reference_bitstring, const VqeConfig& config) {
  config.validate();
  const Circuit circuit = hea_circuit(n_qubits, depth, reference_bitstring);
  std::mt19937_64 rng(config.rng_seed);
  std::vector<double> init = uniform_vector(
      rng, static_cast<std::size_t>(circuit.n_parameters), 0.0, 2 * std::numbers::pi);
  HeaResult out;
  out.result = minimize_energy(circuit, std::move(init), hamiltonian, config);
  append_trace(out.trace, out.result, 0, OptPhase::Global);
  return out;
}

}  // namespace qida
