#include "qida/layers.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qida {

std::string criterion_name(SelectionCriterion c) {
  return c == SelectionCriterion::MaxCorrelation ? "max" : "emp";
}

SelectionCriterion criterion_from_name(const std::string& name) {
  if (name == "max") return SelectionCriterion::MaxCorrelation;
  if (name == "emp") return SelectionCriterion::DistanceReduction;
  throw std::invalid_argument("layers: unknown selection criterion \"" + name +
                              "\" (expected max or emp)");
}

std::vector<EntanglerMap> LayerPlan::all_layers() const {
  std::vector<EntanglerMap> layers = qida_layers;
  layers.push_back(ladder_layer);
  return layers;
}

int LayerPlan::total_correlators() const {
  int count = static_cast<int>(ladder_layer.size());
  for (const EntanglerMap& layer : qida_layers) count += static_cast<int>(layer.size());
  return count;
}

void LayerPlan::validate() const {
  if (n_qubits < 2) throw std::invalid_argument("layer plan: need at least 2 qubits");
  for (std::size_t i = 1; i < finesse_ratios.size(); ++i)
    if (finesse_ratios[i] >= finesse_ratios[i - 1])
      throw std::invalid_argument("layer plan: finesse ratios must be strictly decreasing");
  for (double r : finesse_ratios)
    if (r <= 0.0) throw std::invalid_argument("layer plan: finesse ratios must be positive");

  std::set<int> covered;
  auto check_layer = [&](const EntanglerMap& layer) {
    for (const auto& [u, v] : layer.pairs) {
      if (u == v || u < 0 || v < 0 || u >= n_qubits || v >= n_qubits)
        throw std::invalid_argument("layer plan: invalid qubit pair");
      covered.insert(u);
      covered.insert(v);
    }
  };
  for (const EntanglerMap& layer : qida_layers) check_layer(layer);
  check_layer(ladder_layer);
  if (static_cast<int>(covered.size()) != n_qubits)
    throw std::invalid_argument("layer plan: some qubit appears in no layer");
}

std::vector<WeightedGraph> chunk_pairs(const QmiMatrix& qmi,
                                       const std::vector<double>& finesse_ratios) {
  if (finesse_ratios.empty())
    throw std::invalid_argument("chunk_pairs: need at least one finesse ratio");
  for (std::size_t i = 0; i < finesse_ratios.size(); ++i) {
    if (finesse_ratios[i] <= 0.0)
      throw std::invalid_argument("chunk_pairs: ratios must be positive");
    if (i > 0 && finesse_ratios[i] >= finesse_ratios[i - 1])
      throw std::invalid_argument("chunk_pairs: ratios must be strictly decreasing");
  }

  const int n = qmi.n_qubits();
  std::vector<WeightedGraph> chunks(finesse_ratios.size(), WeightedGraph{n, {}});
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const double value = qmi.value(u, v);
      if (value < finesse_ratios.back()) continue;
      // chunk 0 is open above: [ratios[0], inf); chunk m is [ratios[m], ratios[m-1])
      std::size_t m = 0;
      while (m + 1 < finesse_ratios.size() && value < finesse_ratios[m]) ++m;
      if (value < finesse_ratios[m]) continue;  // below the last ratio
      chunks[m].add_edge(u, v, value);
    }
  return chunks;
}

LayerPlan build_layers(const QmiMatrix& qmi, const std::vector<double>& finesse_ratios,
                       SelectionCriterion criterion) {
  LayerPlan plan;
  plan.n_qubits = qmi.n_qubits();
  plan.finesse_ratios = finesse_ratios;
  plan.criterion = criterion;

  for (WeightedGraph& chunk : chunk_pairs(qmi, finesse_ratios)) {
    SpanningObjective objective = SpanningObjective::Maximize;
    if (criterion == SelectionCriterion::DistanceReduction) {
      // topology-based distance on the linear layout
      for (WeightedEdge& e : chunk.edges) e.weight = std::abs(e.u - e.v);
      objective = SpanningObjective::Minimize;
    }
    EntanglerMap layer;
    for (const WeightedEdge& e : spanning_forest(chunk, objective))
      layer.pairs.emplace_back(std::min(e.u, e.v), std::max(e.u, e.v));
    std::sort(layer.pairs.begin(), layer.pairs.end());
    plan.qida_layers.push_back(std::move(layer));
  }

  for (int q = 0; q + 1 < plan.n_qubits; ++q) plan.ladder_layer.pairs.emplace_back(q, q + 1);
  plan.validate();
  return plan;
}

HeaPlan hea_ladder_plan(int n_qubits, int depth) {
  if (n_qubits < 2) throw std::invalid_argument("hea plan: need at least 2 qubits");
  if (depth < 1) throw std::invalid_argument("hea plan: depth must be >= 1");
  return {n_qubits, depth};
}

int cnot_count(const LayerPlan& plan) { return 2 * plan.total_correlators(); }

int cnot_count(const HeaPlan& plan) { return (plan.n_qubits - 1) * plan.depth; }

std::string layer_plan_to_json(const LayerPlan& plan) {
  nlohmann::json doc;
  doc["n_qubits"] = plan.n_qubits;
  doc["finesse_ratios"] = plan.finesse_ratios;
  doc["criterion"] = criterion_name(plan.criterion);
  auto layer_to_json = [](const EntanglerMap& layer) {
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [u, v] : layer.pairs) pairs.push_back({u, v});
    return pairs;
  };
  doc["qida_layers"] = nlohmann::json::array();
  for (const EntanglerMap& layer : plan.qida_layers)
    doc["qida_layers"].push_back(layer_to_json(layer));
  doc["ladder_layer"] = layer_to_json(plan.ladder_layer);
  doc["cnot_count"] = cnot_count(plan);
  return doc.dump(2) + "\n";
}

LayerPlan layer_plan_from_json(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text);
  LayerPlan plan;
  plan.n_qubits = doc.at("n_qubits").get<int>();
  plan.finesse_ratios = doc.at("finesse_ratios").get<std::vector<double>>();
  plan.criterion = criterion_from_name(doc.at("criterion").get<std::string>());
  auto layer_from_json = [](const nlohmann::json& pairs) {
    EntanglerMap layer;
    for (const auto& p : pairs) layer.pairs.emplace_back(p.at(0).get<int>(), p.at(1).get<int>());
    return layer;
  };
  for (const auto& layer : doc.at("qida_layers")) plan.qida_layers.push_back(layer_from_json(layer));
  plan.ladder_layer = layer_from_json(doc.at("ladder_layer"));
  plan.validate();
  return plan;
}

}  // namespace qida
