#include "qida/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace qida {

void WeightedGraph::add_edge(int u, int v, double weight) {
  if (u == v) throw std::invalid_argument("graph: self-loops are not allowed");
  if (u < 0 || v < 0 || u >= n_vertices || v >= n_vertices)
    throw std::out_of_range("graph: vertex index out of range");
  for (const WeightedEdge& e : edges) {
    const bool same = (e.u == u && e.v == v) || (e.u == v && e.v == u);
    if (same) throw std::invalid_argument("graph: duplicate undirected edge");
  }
  edges.push_back({u, v, weight});
}

void WeightedGraph::validate() const {
  WeightedGraph probe{n_vertices, {}};
  for (const WeightedEdge& e : edges) probe.add_edge(e.u, e.v, e.weight);
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];  // path compression
      x = parent_[x];
    }
    return x;
  }

  // smaller root becomes the representative, keeping merges deterministic
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (b < a) std::swap(a, b);
    parent_[b] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

std::vector<WeightedEdge> spanning_forest(const WeightedGraph& graph,
                                          SpanningObjective objective) {
  graph.validate();
  std::vector<WeightedEdge> sorted = graph.edges;
  for (WeightedEdge& e : sorted)
    if (e.u > e.v) std::swap(e.u, e.v);

  const bool maximize = objective == SpanningObjective::Maximize;
  std::sort(sorted.begin(), sorted.end(),
            [maximize](const WeightedEdge& a, const WeightedEdge& b) {
              if (a.weight != b.weight) return maximize ? a.weight > b.weight
                                                        : a.weight < b.weight;
              if (a.u != b.u) return a.u < b.u;
              return a.v < b.v;
            });

  UnionFind components(graph.n_vertices);
  std::vector<WeightedEdge> forest;
  for (const WeightedEdge& e : sorted)
    if (components.unite(e.u, e.v)) forest.push_back(e);
  return forest;
}

}  // namespace qida
