#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qida/circuit.hpp"
#include "qida/layers.hpp"
#include "qida/optimize.hpp"
#include "qida/pauli.hpp"
#include "qida/simulator.hpp"

namespace qida {

/// Layered SO4 ansatz compiled from a plan: one correlator per entangler pair,
/// six parameters each, contiguous slot ranges per layer.
struct LayeredAnsatz {
  Circuit circuit;
  std::vector<std::pair<int, int>> layer_slot_ranges;  // [begin, end) per layer
  std::vector<std::pair<int, int>> layer_gate_ranges;

  static LayeredAnsatz from_plan(const LayerPlan& plan, std::uint64_t reference_bitstring);
  int n_layers() const { return static_cast<int>(layer_slot_ranges.size()); }
  /// Circuit containing only the gates of one layer, slots renumbered from 0.
  Circuit layer_circuit(int layer) const;
  /// Circuit truncated to layers [0, n_layers); slots keep their numbering.
  Circuit prefix_circuit(int n_layers) const;
};

/// Rotation-plus-CNOT-ladder baseline: depth repetitions of (Ry, Rz per qubit
/// followed by the adjacent-pair CNOT ladder), closed by one more rotation
/// layer. Parameter count is 2 n (depth + 1).
Circuit hea_circuit(int n_qubits, int depth, std::uint64_t reference_bitstring);

double energy(const Circuit& circuit, std::span<const double> params,
              const PauliSum& hamiltonian);
double energy(const Circuit& circuit, std::span<const double> params,
              const PauliSum& hamiltonian, const StateVector& initial);

/// Analytic gradient via reverse-sweep (adjoint) differentiation.
std::vector<double> gradient(const Circuit& circuit, std::span<const double> params,
                             const PauliSum& hamiltonian);
std::vector<double> gradient(const Circuit& circuit, std::span<const double> params,
                             const PauliSum& hamiltonian, const StateVector& initial);

/// BFGS on the circuit energy from a given starting point.
OptResult minimize_energy(const Circuit& circuit, std::vector<double> initial_params,
                          const PauliSum& hamiltonian, const VqeConfig& config);
OptResult minimize_energy(const Circuit& circuit, std::vector<double> initial_params,
                          const PauliSum& hamiltonian, const VqeConfig& config,
                          const StateVector& initial_state);

enum class OptPhase { Independent, Relaxation, Global };
std::string phase_name(OptPhase phase);

struct TracePoint {
  int layer;
  OptPhase phase;
  int iteration;
  double energy;
};

struct LayerRecord {
  int layer;
  double independent_energy;  // == relaxed_energy for layer 0
  double relaxed_energy;
  int independent_iterations;
  int relaxed_iterations;
  bool independent_raised_energy;  // above previous relaxed energy + 1e-9
};

struct IncrementalResult {
  OptResult result;
  std::vector<LayerRecord> layers;
  std::vector<TracePoint> trace;
};

/// Layer-wise optimization: layer 0 starts uniform in [0, 2pi) and is fully
/// optimized; every later layer is first optimized alone on top of the frozen
/// previous state (near-identity start, offsets uniform in
/// [0, layer_init_halfwidth)), then the whole circuit is relaxed from the
/// concatenated parameters.
IncrementalResult incremental_vqe(const LayerPlan& plan, const PauliSum& hamiltonian,
                                  std::uint64_t reference_bitstring, const VqeConfig& config);

struct HeaResult {
  OptResult result;
  std::vector<TracePoint> trace;
};

/// Single global BFGS over the full ladder circuit, all parameters starting
/// uniform in [0, 2pi).
HeaResult hea_vqe(int n_qubits, int depth, const PauliSum& hamiltonian,
                  std::uint64_t reference_bitstring, const VqeConfig& config);

}  // namespace qida
