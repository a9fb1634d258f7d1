#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "qida/config.hpp"
#include "qida/metrics.hpp"
#include "qida/qmi.hpp"
#include "qida/simulator.hpp"
#include "qida/vqe.hpp"

namespace qida {

/// Everything derived once per experiment and shared read-only by the runs.
struct ExperimentContext {
  PauliSum hamiltonian;
  int n_qubits = 0;
  std::uint64_t reference_bitstring = 0;
  double reference_energy = 0.0;  // <ref|H|ref>: SCF-like for molecules, Neel for lattices
  GroundState exact;
  SymmetryOperators symmetry;

  ExperimentContext() : hamiltonian(1), exact{0.0, StateVector::basis_state(1, 0)} {}
};

/// Spin-lattice analogues of the molecular symmetry operators: total Sz,
/// total S^2 and the occupation count over the qubit register.
SymmetryOperators lattice_symmetry_operators(int n_qubits);

ExperimentContext prepare_context(const ExperimentConfig& config);
QmiMatrix resolve_qmi(const ExperimentConfig& config, const ExperimentContext& context);

void write_qmi_csv(std::ostream& out, const QmiMatrix& qmi);
QmiMatrix read_qmi_csv(std::istream& in);

std::string run_record_to_json(const RunRecord& record);
RunRecord run_record_from_json(const std::string& line);

/// Batch output of one ansatz configuration.
struct AnsatzBatch {
  std::string label;
  int cnot_count = 0;
  std::vector<RunRecord> records;
  std::vector<std::string> trajectory_lines;  // JSONL, one record per iterate
};

/// Seeded VQE batch for one ansatz (per-run seed = config.seed + run index).
AnsatzBatch run_ansatz_batch(const ExperimentConfig& config, const ExperimentContext& context,
                             AnsatzKind kind, const LayerPlan* plan);

// CLI subcommand bodies; all file output lands inside config.out.
void cmd_qmi(const ExperimentConfig& config);
void cmd_build(const ExperimentConfig& config);
void cmd_run(const ExperimentConfig& config);
void cmd_summarize(const ExperimentConfig& config);

}  // namespace qida
