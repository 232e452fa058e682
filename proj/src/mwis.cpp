#include "bandmatch/mwis.hpp"

#include <algorithm>
#include <queue>

namespace bandmatch {

WeightedHypergraph dual_hypergraph(const VertexWeightedGraph& g) {
  g.validate();

  // Graph edges in (v, u) v<u order become hypergraph vertices 0..m-1.
  std::vector<std::vector<int>> incident(g.n);
  int edge_id = 0;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adjacency[v])
      if (v < u) {
        incident[v].push_back(edge_id);
        incident[u].push_back(edge_id);
        ++edge_id;
      }

  WeightedHypergraph dual;
  int dummy = edge_id;
  dual.edges.reserve(g.n);
  int s = 1;
  for (int v = 0; v < g.n; ++v) {
    Edge e;
    e.weight = static_cast<double>(g.weights[v]);
    if (incident[v].empty()) {
      e.vertices.push_back(dummy++);
    } else {
      e.vertices = incident[v];
      std::sort(e.vertices.begin(), e.vertices.end());
    }
    s = std::max(s, static_cast<int>(e.vertices.size()));
    dual.edges.push_back(std::move(e));
  }
  dual.n = dummy;
  dual.s = s;
  return dual;
}

std::vector<int> matching_to_independent_set(const VertexWeightedGraph& g, const Matching& m) {
  const WeightedHypergraph dual = dual_hypergraph(g);
  if (!is_valid_matching(dual, m.edge_ids))
    throw Error("matching is not valid for the dual of this graph");
  std::vector<int> vertices = m.edge_ids;  // hyperedge i is graph vertex i
  std::sort(vertices.begin(), vertices.end());
  return vertices;
}

DuplicationResult duplicate_vertices(const VertexWeightedGraph& g, long long weight_cap,
                                     long long edge_cap) {
  g.validate();
  long long total = 0;
  for (long long w : g.weights) total += w;
  if (total > weight_cap)
    throw Error("duplication refused: total weight " + std::to_string(total) +
                " exceeds cap " + std::to_string(weight_cap) + " (vertex blow-up)");
  long long expanded_edges = 0;
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adjacency[v])
      if (v < u) expanded_edges += g.weights[v] * g.weights[u];
  if (expanded_edges > edge_cap)
    throw Error("duplication refused: " + std::to_string(expanded_edges) +
                " expanded edges exceed cap " + std::to_string(edge_cap) + " (edge blow-up)");

  DuplicationResult out;
  out.graph.n = static_cast<int>(total);
  out.graph.weights.assign(out.graph.n, 1);
  out.graph.adjacency.assign(out.graph.n, {});
  out.owner.reserve(out.graph.n);

  std::vector<int> first(g.n + 1, 0);
  for (int v = 0; v < g.n; ++v) {
    first[v + 1] = first[v] + static_cast<int>(g.weights[v]);
    for (long long c = 0; c < g.weights[v]; ++c) out.owner.push_back(v);
  }

  // Copies of the same vertex stay non-adjacent; copies of neighbors are
  // fully connected.
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adjacency[v]) {
      if (v >= u) continue;
      for (int a = first[v]; a < first[v + 1]; ++a)
        for (int b = first[u]; b < first[u + 1]; ++b) {
          out.graph.adjacency[a].push_back(b);
          out.graph.adjacency[b].push_back(a);
        }
    }
  for (auto& nb : out.graph.adjacency) std::sort(nb.begin(), nb.end());
  return out;
}

std::vector<int> greedy_mis(const VertexWeightedGraph& g) {
  std::vector<int> degree(g.n);
  std::vector<char> gone(g.n, 0);
  using Entry = std::pair<int, int>;  // (degree, id)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  for (int v = 0; v < g.n; ++v) {
    degree[v] = static_cast<int>(g.adjacency[v].size());
    heap.emplace(degree[v], v);
  }

  std::vector<int> picked;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (gone[v] || d != degree[v]) continue;  // stale entry
    picked.push_back(v);
    gone[v] = 1;
    for (int u : g.adjacency[v]) {
      if (gone[u]) continue;
      gone[u] = 1;
      for (int t : g.adjacency[u]) {
        if (gone[t]) continue;
        --degree[t];
        heap.emplace(degree[t], t);
      }
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

Solver make_dup_greedy_solver(double eps, long long weight_cap) {
  Solver s;
  s.name = "dup-greedy";
  s.alpha = 0.0;  // no asserted factor
  s.solve = [eps, weight_cap](const WeightedHypergraph& sub, double) {
    const IntegerizedInstance integer = integerize(sub, eps);
    const int m = integer.graph.edge_count();

    // The sub-instance read back as a vertex-weighted problem: one conflict
    // vertex per hyperedge, adjacent when the hyperedges intersect.
    VertexWeightedGraph conflict;
    conflict.n = m;
    conflict.weights.resize(m);
    conflict.adjacency.assign(m, {});
    for (int i = 0; i < m; ++i)
      conflict.weights[i] = static_cast<long long>(integer.graph.edges[i].weight);
    for (int i = 0; i < m; ++i)
      for (int j = i + 1; j < m; ++j) {
        const auto& a = integer.graph.edges[i].vertices;
        const auto& b = integer.graph.edges[j].vertices;
        bool meet = false;
        for (std::size_t x = 0, y = 0; x < a.size() && y < b.size();) {
          if (a[x] == b[y]) {
            meet = true;
            break;
          }
          if (a[x] < b[y]) ++x; else ++y;
        }
        if (meet) {
          conflict.adjacency[i].push_back(j);
          conflict.adjacency[j].push_back(i);
        }
      }

    const DuplicationResult dup = duplicate_vertices(conflict, weight_cap);
    const std::vector<int> copies = greedy_mis(dup.graph);

    Matching out;
    for (int c : copies) {
      const int v = dup.owner[c];
      if (out.edge_ids.empty() || out.edge_ids.back() != v) out.edge_ids.push_back(v);
    }
    std::sort(out.edge_ids.begin(), out.edge_ids.end());
    out.edge_ids.erase(std::unique(out.edge_ids.begin(), out.edge_ids.end()), out.edge_ids.end());
    return out;
  };
  return s;
}

MwisResult mwis_via_duality(const VertexWeightedGraph& g, double eps, const std::string& solver_name,
                            const CascadeOptions& options) {
  Solver solver;
  if (solver_name == "dup-greedy")
    solver = make_dup_greedy_solver(snap_epsilon(eps));
  else
    solver = find_solver(solver_name);

  MwisResult res;
  res.cascade = reduce_and_solve(dual_hypergraph(g), eps, solver, options);
  res.vertices = matching_to_independent_set(g, res.cascade.best);
  res.weight = vertex_set_weight(g, res.vertices);
  return res;
}

}  // namespace bandmatch
