#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace bandmatch {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/** One weighted hyperedge. Vertices are kept sorted ascending and distinct. */
struct Edge {
  double weight = 0.0;
  std::vector<int> vertices;

  bool operator==(const Edge&) const = default;
};

/**
 * Edge-weighted hypergraph. Vertex ids are 0..n-1, edge ids are positions in
 * `edges`. `s` is the declared maximum edge cardinality; every edge has
 * between 1 and s vertices and weight >= 1. An ordinary graph is the s == 2
 * case.
 */
struct WeightedHypergraph {
  int n = 0;
  int s = 2;
  std::vector<Edge> edges;

  int edge_count() const { return static_cast<int>(edges.size()); }
  double max_weight() const;

  /// Throws Error on any violated structural invariant.
  void validate() const;

  bool operator==(const WeightedHypergraph&) const = default;
};

/// Where a matched edge came from inside the shift cascade.
struct ProvenanceTag {
  int shift = -1;     // x
  int interval = -1;  // j, 1-based, heaviest interval first

  bool operator==(const ProvenanceTag&) const = default;
};

/**
 * A set of pairwise vertex-disjoint edges, stored as sorted ascending edge
 * ids. `provenance` is either empty or parallel to `edge_ids`.
 */
struct Matching {
  std::vector<int> edge_ids;
  std::vector<ProvenanceTag> provenance;

  bool operator==(const Matching&) const = default;
};

/// True iff the ids are known, duplicate-free and the edges pairwise disjoint.
bool is_valid_matching(const WeightedHypergraph& h, const std::vector<int>& edge_ids);

/// Sum of edge weights in ascending id order. Throws Error on an invalid matching.
double matching_weight(const WeightedHypergraph& h, const Matching& m);

/** Simple undirected graph with positive integer vertex weights. */
struct VertexWeightedGraph {
  int n = 0;
  std::vector<long long> weights;            // size n, each >= 1
  std::vector<std::vector<int>> adjacency;   // sorted neighbor lists, symmetric

  int max_degree() const;
  long long edge_count() const;

  void validate() const;

  bool operator==(const VertexWeightedGraph&) const = default;
};

/// Builds the adjacency structure from an edge list; rejects loops and duplicates.
VertexWeightedGraph make_vertex_graph(int n, std::vector<long long> weights,
                                      const std::vector<std::pair<int, int>>& edges);

bool is_independent_set(const VertexWeightedGraph& g, const std::vector<int>& vertices);

long long vertex_set_weight(const VertexWeightedGraph& g, const std::vector<int>& vertices);

}  // namespace bandmatch
