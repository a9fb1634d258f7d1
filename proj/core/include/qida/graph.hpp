#pragma once

#include <vector>

namespace qida {

struct WeightedEdge {
  int u;
  int v;
  double weight;
};

/// Undirected weighted graph on vertices 0..n_vertices-1; no self-loops or
/// duplicate edges.
struct WeightedGraph {
  int n_vertices = 0;
  std::vector<WeightedEdge> edges;

  void add_edge(int u, int v, double weight);
  void validate() const;
};

enum class SpanningObjective { Maximize, Minimize };

/// Kruskal spanning forest: per connected component a spanning tree with
/// extremal total weight. Ties broken deterministically by sorting edges on
/// (weight, min(u,v), max(u,v)). Edge count equals covered vertices minus
/// component count; an empty graph yields an empty forest.
std::vector<WeightedEdge> spanning_forest(const WeightedGraph& graph,
                                          SpanningObjective objective);

}  // namespace qida
