#pragma once

#include <functional>
#include <string>
#include <string_view>

#include "bandmatch/hypergraph.hpp"

namespace bandmatch {

/**
 * A pluggable matching black box. `solve` receives a sub-instance whose
 * weights lie in [1, weight_bound] and must return a valid matching of it.
 * `alpha` is the claimed approximation factor; it is reporting metadata only
 * and never trusted by the cascade.
 */
struct Solver {
  std::string name;
  double alpha = 0.0;
  std::function<Matching(const WeightedHypergraph&, double weight_bound)> solve;
};

/**
 * Scans edges by descending weight (ties: lowest id) and keeps every edge
 * disjoint from the picks so far. Factor 1/s on instances with edge
 * cardinality at most s.
 */
Matching greedy_matching(const WeightedHypergraph& h);

/**
 * Exact maximum-weight matching by exhaustive search over edge subsets,
 * pruned with "current + sum of remaining weights <= best". Among maximum
 * matchings returns the lexicographically smallest edge-id set. Refuses
 * instances with more than `max_edges` edges.
 */
Matching exact_matching_bruteforce(const WeightedHypergraph& h, int max_edges = 20);

/// Registered black boxes: "greedy" and "exact". Throws on unknown names.
const Solver& find_solver(std::string_view name);

std::vector<std::string> solver_names();

}  // namespace bandmatch
