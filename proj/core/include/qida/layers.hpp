#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qida/graph.hpp"
#include "qida/qmi.hpp"

namespace qida {

enum class SelectionCriterion { MaxCorrelation, DistanceReduction };

std::string criterion_name(SelectionCriterion c);     // "max" / "emp"
SelectionCriterion criterion_from_name(const std::string& name);

/// Ordered list of two-qubit correlator placements for one ansatz layer.
struct EntanglerMap {
  std::vector<std::pair<int, int>> pairs;  // normalized (min, max), sorted
  bool empty() const { return pairs.empty(); }
  std::size_t size() const { return pairs.size(); }
};

/// Blueprint of the layered ansatz: one entangler map per finesse chunk plus
/// the closing adjacent-pair ladder.
struct LayerPlan {
  int n_qubits = 0;
  std::vector<double> finesse_ratios;  // strictly decreasing
  SelectionCriterion criterion = SelectionCriterion::MaxCorrelation;
  std::vector<EntanglerMap> qida_layers;
  EntanglerMap ladder_layer;

  std::vector<EntanglerMap> all_layers() const;  // qida layers + ladder
  int total_correlators() const;
  void validate() const;
};

/// Splits qubit pairs into per-chunk graphs: chunk 0 holds pairs with
/// QMI >= ratios[0], chunk m holds ratios[m] <= QMI < ratios[m-1]. Pairs
/// below the last ratio are left for the ladder. Edge weights carry the QMI
/// value; the selection criterion rewrites them when layers are built.
std::vector<WeightedGraph> chunk_pairs(const QmiMatrix& qmi,
                                       const std::vector<double>& finesse_ratios);

/// Full plan: per-chunk spanning forest (MaxCorrelation maximizes summed QMI,
/// DistanceReduction minimizes summed |u - v|) plus the top-down ladder layer
/// joining residual correlation groups.
LayerPlan build_layers(const QmiMatrix& qmi, const std::vector<double>& finesse_ratios,
                       SelectionCriterion criterion);

/// Hardware-efficient ladder baseline descriptor: per-qubit rotation layers
/// interleaved with adjacent-pair CNOT ladders, repeated `depth` times.
struct HeaPlan {
  int n_qubits = 0;
  int depth = 0;
};

HeaPlan hea_ladder_plan(int n_qubits, int depth);

/// SO4 correlators compile to 2 CNOTs each.
int cnot_count(const LayerPlan& plan);
/// (n - 1) * depth.
int cnot_count(const HeaPlan& plan);

std::string layer_plan_to_json(const LayerPlan& plan);
LayerPlan layer_plan_from_json(const std::string& text);

}  // namespace qida
