#include "bandmatch/solvers.hpp"

#include <algorithm>
#include <numeric>

namespace bandmatch {

Matching greedy_matching(const WeightedHypergraph& h) {
  std::vector<int> order(h.edges.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (h.edges[a].weight != h.edges[b].weight) return h.edges[a].weight > h.edges[b].weight;
    return a < b;
  });

  Matching m;
  std::vector<char> used(h.n, 0);
  for (int id : order) {
    const Edge& e = h.edges[id];
    bool free = true;
    for (int v : e.vertices)
      if (used[v]) {
        free = false;
        break;
      }
    if (!free) continue;
    for (int v : e.vertices) used[v] = 1;
    m.edge_ids.push_back(id);
  }
  std::sort(m.edge_ids.begin(), m.edge_ids.end());
  return m;
}

namespace {

struct ExactSearch {
  const WeightedHypergraph& h;
  std::vector<double> suffix;   // suffix[i] = sum of weights of edges i..m-1
  std::vector<char> used;       // vertex occupancy
  std::vector<int> current;
  std::vector<int> best;
  double current_weight = 0.0;
  double best_weight = -1.0;

  explicit ExactSearch(const WeightedHypergraph& g) : h(g), used(g.n, 0) {
    const int m = g.edge_count();
    suffix.assign(m + 1, 0.0);
    for (int i = m - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + g.edges[i].weight;
  }

  // Include-first depth-first search in edge-id order visits candidate id sets
  // in lexicographic order, so keeping only strict improvements leaves the
  // lexicographically smallest maximum. The prune can only drop ties, which
  // would all be lexicographically larger than the incumbent.
  void visit(int i) {
    if (current_weight + suffix[i] <= best_weight) return;
    if (i == h.edge_count()) {
      if (current_weight > best_weight) {
        best_weight = current_weight;
        best = current;
      }
      return;
    }
    const Edge& e = h.edges[i];
    bool free = true;
    for (int v : e.vertices)
      if (used[v]) {
        free = false;
        break;
      }
    if (free) {
      for (int v : e.vertices) used[v] = 1;
      current.push_back(i);
      current_weight += e.weight;
      visit(i + 1);
      current_weight -= e.weight;
      current.pop_back();
      for (int v : e.vertices) used[v] = 0;
    }
    visit(i + 1);
  }
};

}  // namespace

Matching exact_matching_bruteforce(const WeightedHypergraph& h, int max_edges) {
  if (h.edge_count() > max_edges)
    throw Error("exact solver refuses " + std::to_string(h.edge_count()) +
                " edges (limit " + std::to_string(max_edges) + ")");
  ExactSearch search(h);
  search.visit(0);
  Matching m;
  m.edge_ids = search.best;
  return m;
}

const Solver& find_solver(std::string_view name) {
  static const Solver greedy{
      "greedy", 0.5,
      [](const WeightedHypergraph& h, double) { return greedy_matching(h); }};
  static const Solver exact{
      "exact", 1.0,
      [](const WeightedHypergraph& h, double) { return exact_matching_bruteforce(h); }};
  if (name == "greedy") return greedy;
  if (name == "exact") return exact;
  throw Error("unknown solver '" + std::string(name) + "' (available: greedy, exact)");
}

std::vector<std::string> solver_names() { return {"greedy", "exact"}; }

}  // namespace bandmatch
