#pragma once

#include "bandmatch/cascade.hpp"

namespace bandmatch {

/**
 * Dual view of a vertex-weighted graph: hypergraph vertices are the graph
 * edges (ids 0..m-1), and hyperedge i is vertex i's set of incident edges,
 * weighted w(i). A degree-0 vertex gets a private dummy hypergraph vertex so
 * its hyperedge stays non-empty. Matchings of the dual are exactly the
 * independent sets of the graph, weight for weight.
 */
WeightedHypergraph dual_hypergraph(const VertexWeightedGraph& g);

/// Pulls a matching of dual_hypergraph(g) back to the graph vertex set it selects.
std::vector<int> matching_to_independent_set(const VertexWeightedGraph& g, const Matching& m);

struct DuplicationResult {
  VertexWeightedGraph graph;  // unit weights
  std::vector<int> owner;     // copy -> original vertex
};

/**
 * Replaces vertex v by w(v) mutually non-adjacent copies and connects all
 * copies of neighbors pairwise, turning maximum-weight independent sets into
 * maximum-cardinality ones. Refuses instances whose total weight exceeds
 * `weight_cap` or whose expanded edge count exceeds `edge_cap`.
 */
DuplicationResult duplicate_vertices(const VertexWeightedGraph& g, long long weight_cap = 100000,
                                     long long edge_cap = 10000000);

/**
 * Picks a minimum-degree vertex of the residual graph (ties: lowest id),
 * removes it and its neighbors, repeats. Returns a maximal independent set,
 * sorted ascending. Vertex weights are ignored.
 */
std::vector<int> greedy_mis(const VertexWeightedGraph& g);

struct MwisResult {
  std::vector<int> vertices;  // sorted ascending
  long long weight = 0;
  CascadeResult cascade;
};

/**
 * Maximum-weight independent set through the matching reduction: build the
 * dual hypergraph, run reduce_and_solve with the named black box, pull the
 * winning matching back to a vertex set. Solvers: "exact", "greedy", and
 * "dup-greedy" (integerize the sub-instance, re-read it as a vertex-weighted
 * conflict graph, duplicate vertices, then greedy_mis).
 */
MwisResult mwis_via_duality(const VertexWeightedGraph& g, double eps, const std::string& solver_name,
                            const CascadeOptions& options = {});

/// The "dup-greedy" black box for a given eps (it integerizes with that eps).
Solver make_dup_greedy_solver(double eps, long long weight_cap = 100000);

}  // namespace bandmatch
