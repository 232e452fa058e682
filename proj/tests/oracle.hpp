#pragma once

// Test-side reference results, written before the library algorithms and kept
// independent of them: plain exhaustive search, no pruning, no shared code
// with the solvers under test.

#include <cstdint>
#include <vector>

#include "bandmatch/hypergraph.hpp"

namespace oracle {

struct BestMatching {
  double weight = 0.0;
  std::vector<int> edge_ids;  // lexicographically smallest among maxima
};

namespace detail {

inline void visit(const bandmatch::WeightedHypergraph& h, const std::vector<double>& weights,
                  const std::vector<char>& allowed, std::size_t i, std::vector<char>& used,
                  std::vector<int>& current, double current_weight, BestMatching& best,
                  std::vector<std::vector<int>>* all_maximal_sets) {
  if (i == h.edges.size()) {
    if (current_weight > best.weight) {
      best.weight = current_weight;
      best.edge_ids = current;
    }
    if (all_maximal_sets) all_maximal_sets->push_back(current);
    return;
  }
  bool free = allowed.empty() || allowed[i];
  if (free)
    for (int v : h.edges[i].vertices)
      if (used[v]) {
        free = false;
        break;
      }
  if (free) {
    for (int v : h.edges[i].vertices) used[v] = 1;
    current.push_back(static_cast<int>(i));
    visit(h, weights, allowed, i + 1, used, current, current_weight + weights[i], best,
          all_maximal_sets);
    current.pop_back();
    for (int v : h.edges[i].vertices) used[v] = 0;
  }
  visit(h, weights, allowed, i + 1, used, current, current_weight, best, all_maximal_sets);
}

}  // namespace detail

/// Max-weight matching among edges with allowed[i] != 0 (empty mask = all),
/// under externally supplied weights.
inline BestMatching best_matching(const bandmatch::WeightedHypergraph& h,
                                  const std::vector<double>& weights,
                                  const std::vector<char>& allowed = {}) {
  BestMatching best;
  std::vector<char> used(h.n, 0);
  std::vector<int> current;
  detail::visit(h, weights, allowed, 0, used, current, 0.0, best, nullptr);
  return best;
}

inline BestMatching best_matching(const bandmatch::WeightedHypergraph& h) {
  std::vector<double> weights;
  for (const auto& e : h.edges) weights.push_back(e.weight);
  return best_matching(h, weights);
}

/// Every matching of h, as sorted edge-id lists (small instances only).
inline std::vector<std::vector<int>> all_matchings(const bandmatch::WeightedHypergraph& h) {
  BestMatching best;
  std::vector<char> used(h.n, 0);
  std::vector<int> current;
  std::vector<std::vector<int>> all;
  std::vector<double> weights(h.edges.size(), 0.0);
  detail::visit(h, weights, {}, 0, used, current, 0.0, best, &all);
  return all;
}

struct BestVertexSet {
  long long weight = 0;
  std::vector<int> vertices;
};

/// Max-weight independent set by scanning all subsets; n must stay below ~25.
inline BestVertexSet best_independent_set(const bandmatch::VertexWeightedGraph& g) {
  BestVertexSet best;
  std::vector<std::uint32_t> nb(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adjacency[v]) nb[v] |= 1u << u;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    bool ok = true;
    long long w = 0;
    for (int v = 0; v < g.n && ok; ++v) {
      if (!(mask & (1u << v))) continue;
      if (nb[v] & mask) ok = false;
      w += g.weights[v];
    }
    if (ok && w > best.weight) {
      best.weight = w;
      best.vertices.clear();
      for (int v = 0; v < g.n; ++v)
        if (mask & (1u << v)) best.vertices.push_back(v);
    }
  }
  return best;
}

/// Every independent set of g, as sorted vertex lists (small instances only).
inline std::vector<std::vector<int>> all_independent_sets(const bandmatch::VertexWeightedGraph& g) {
  std::vector<std::uint32_t> nb(g.n, 0);
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adjacency[v]) nb[v] |= 1u << u;
  std::vector<std::vector<int>> all;
  for (std::uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if ((mask & (1u << v)) && (nb[v] & mask)) ok = false;
    if (!ok) continue;
    std::vector<int> set;
    for (int v = 0; v < g.n; ++v)
      if (mask & (1u << v)) set.push_back(v);
    all.push_back(set);
  }
  return all;
}

}  // namespace oracle
