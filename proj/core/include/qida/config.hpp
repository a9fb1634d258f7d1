#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "qida/hamiltonians.hpp"
#include "qida/layers.hpp"

namespace qida {

struct HeisenbergSpec {
  LatticeTopology topology = LatticeTopology::Chain;
  int n_qubits = 0;
  double coupling = 1.0;
};

/// "chain:N:J" or "ring:N:J".
HeisenbergSpec parse_heisenberg_spec(const std::string& text);

enum class QmiSource { ExactGroundState, DeterminantFile, CsvFile };

enum class AnsatzKind { QidaMax, QidaEmp, Hea };
std::string ansatz_label(AnsatzKind kind);          // "qida-max" / "qida-emp" / "hea"
AnsatzKind ansatz_from_label(const std::string& label);

/// One experiment: a Hamiltonian source, a QMI source, layer-plan settings
/// and the VQE batch parameters. Loaded from a flat TOML document; every
/// field can be overridden by the CLI flag of the same name.
struct ExperimentConfig {
  // hamiltonian source (exactly one)
  std::optional<std::string> fcidump;
  std::optional<HeisenbergSpec> heisenberg;

  // qmi source: "exact", "dets:<path>" or "csv:<path>"
  QmiSource qmi_source = QmiSource::ExactGroundState;
  std::string qmi_path;

  std::optional<std::string> plan;  // pre-built layer-plan JSON

  std::vector<double> finesse_ratios;
  SelectionCriterion criterion = SelectionCriterion::MaxCorrelation;
  int hea_depth = 1;
  int n_runs = 50;
  std::uint64_t seed = 0;
  std::string out = "out";
  std::vector<AnsatzKind> ansatz;  // defaults to all three

  double det_cutoff = 1e-12;
  std::size_t max_determinants = 100000;
  double gradient_tolerance = 1e-6;
  int max_iterations = 2000;
  int threads = 0;  // 0 = hardware concurrency

  void set_qmi_source(const std::string& spec);  // parses the prefixed form
  void validate() const;
};

ExperimentConfig load_config(std::istream& in);
ExperimentConfig load_config_file(const std::string& path);

namespace toml {

/// Minimal flat-TOML value: string, number, boolean or homogeneous array.
struct Value {
  enum class Kind { String, Number, Boolean, Array } kind;
  std::string string_value;
  double number_value = 0.0;
  bool bool_value = false;
  std::vector<Value> array_value;
};

/// Parses a flat `key = value` TOML document (comments with #, no tables).
std::vector<std::pair<std::string, Value>> parse(std::istream& in);

}  // namespace toml

}  // namespace qida
