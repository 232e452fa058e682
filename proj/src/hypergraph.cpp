#include "bandmatch/hypergraph.hpp"

#include <algorithm>
#include <cmath>

namespace bandmatch {

double WeightedHypergraph::max_weight() const {
  double w = 0.0;
  for (const Edge& e : edges) w = std::max(w, e.weight);
  return w;
}

void WeightedHypergraph::validate() const {
  if (n < 0) throw Error("vertex count must be non-negative");
  if (s < 1) throw Error("edge cardinality bound must be at least 1");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    const std::string where = "edge " + std::to_string(i) + ": ";
    if (e.vertices.empty()) throw Error(where + "empty vertex set");
    if (static_cast<int>(e.vertices.size()) > s)
      throw Error(where + "has " + std::to_string(e.vertices.size()) +
                  " vertices, bound is " + std::to_string(s));
    if (!(e.weight >= 1.0) || !std::isfinite(e.weight))
      throw Error(where + "weight must be a finite value >= 1");
    for (std::size_t k = 0; k < e.vertices.size(); ++k) {
      int v = e.vertices[k];
      if (v < 0 || v >= n) throw Error(where + "vertex id " + std::to_string(v) + " out of range");
      if (k > 0 && e.vertices[k - 1] >= v) throw Error(where + "vertices must be sorted and distinct");
    }
  }
}

bool is_valid_matching(const WeightedHypergraph& h, const std::vector<int>& edge_ids) {
  std::vector<char> used_edge(h.edges.size(), 0);
  std::vector<char> used_vertex(h.n, 0);
  for (int id : edge_ids) {
    if (id < 0 || id >= h.edge_count()) return false;
    if (used_edge[id]) return false;
    used_edge[id] = 1;
    for (int v : h.edges[id].vertices) {
      if (used_vertex[v]) return false;
      used_vertex[v] = 1;
    }
  }
  return true;
}

double matching_weight(const WeightedHypergraph& h, const Matching& m) {
  if (!is_valid_matching(h, m.edge_ids)) throw Error("matching is not valid for this instance");
  std::vector<int> ids = m.edge_ids;
  std::sort(ids.begin(), ids.end());
  double total = 0.0;
  for (int id : ids) total += h.edges[id].weight;
  return total;
}

int VertexWeightedGraph::max_degree() const {
  std::size_t d = 0;
  for (const auto& nb : adjacency) d = std::max(d, nb.size());
  return static_cast<int>(d);
}

long long VertexWeightedGraph::edge_count() const {
  long long twice = 0;
  for (const auto& nb : adjacency) twice += static_cast<long long>(nb.size());
  return twice / 2;
}

void VertexWeightedGraph::validate() const {
  if (n < 0) throw Error("vertex count must be non-negative");
  if (static_cast<int>(weights.size()) != n) throw Error("weight list size mismatch");
  if (static_cast<int>(adjacency.size()) != n) throw Error("adjacency size mismatch");
  for (int v = 0; v < n; ++v) {
    if (weights[v] < 1) throw Error("vertex " + std::to_string(v) + ": weight must be >= 1");
    const auto& nb = adjacency[v];
    for (std::size_t k = 0; k < nb.size(); ++k) {
      int u = nb[k];
      if (u < 0 || u >= n) throw Error("vertex " + std::to_string(v) + ": neighbor out of range");
      if (u == v) throw Error("vertex " + std::to_string(v) + ": self loop");
      if (k > 0 && nb[k - 1] >= u) throw Error("vertex " + std::to_string(v) + ": neighbors must be sorted and distinct");
      if (!std::binary_search(adjacency[u].begin(), adjacency[u].end(), v))
        throw Error("adjacency not symmetric between " + std::to_string(v) + " and " + std::to_string(u));
    }
  }
}

VertexWeightedGraph make_vertex_graph(int n, std::vector<long long> weights,
                                      const std::vector<std::pair<int, int>>& edges) {
  VertexWeightedGraph g;
  g.n = n;
  g.weights = std::move(weights);
  g.adjacency.assign(n, {});
  for (auto [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n) throw Error("edge endpoint out of range");
    if (u == v) throw Error("self loop on vertex " + std::to_string(u));
    g.adjacency[u].push_back(v);
    g.adjacency[v].push_back(u);
  }
  for (int v = 0; v < n; ++v) {
    auto& nb = g.adjacency[v];
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw Error("duplicate edge at vertex " + std::to_string(v));
  }
  g.validate();
  return g;
}

bool is_independent_set(const VertexWeightedGraph& g, const std::vector<int>& vertices) {
  std::vector<char> in(g.n, 0);
  for (int v : vertices) {
    if (v < 0 || v >= g.n) return false;
    if (in[v]) return false;  // duplicates not allowed
    in[v] = 1;
  }
  for (int v : vertices)
    for (int u : g.adjacency[v])
      if (in[u]) return false;
  return true;
}

long long vertex_set_weight(const VertexWeightedGraph& g, const std::vector<int>& vertices) {
  if (!is_independent_set(g, vertices)) throw Error("vertex set is not independent");
  long long total = 0;
  for (int v : vertices) total += g.weights[v];
  return total;
}

}  // namespace bandmatch
