#include "bandmatch/generator.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <set>

namespace bandmatch {

WeightDist WeightDist::parse(const std::string& text) {
  const auto open = text.find('(');
  const auto comma = text.find(',', open == std::string::npos ? 0 : open);
  const auto close = text.rfind(')');
  if (open == std::string::npos || comma == std::string::npos || close == std::string::npos ||
      close != text.size() - 1 || comma < open)
    throw Error("bad weight distribution '" + text + "' (expected name(a,b))");

  const std::string name = text.substr(0, open);
  auto number = [&](std::size_t from, std::size_t to) {
    double v = 0.0;
    const char* begin = text.data() + from;
    const char* end = text.data() + to;
    while (begin < end && *begin == ' ') ++begin;
    auto [p, ec] = std::from_chars(begin, end, v);
    while (p < end && *p == ' ') ++p;
    if (ec != std::errc{} || p != end) throw Error("bad number in distribution '" + text + "'");
    return v;
  };

  WeightDist d;
  d.a = number(open + 1, comma);
  d.b = number(comma + 1, close);
  if (name == "uniform") {
    d.kind = Kind::uniform;
    if (d.a < 1.0) throw Error("uniform lower bound must be >= 1");
    if (d.b < d.a) throw Error("uniform upper bound below lower bound");
  } else if (name == "powerlaw") {
    d.kind = Kind::powerlaw;
    if (d.a <= 1.0) throw Error("powerlaw exponent must be > 1");
    if (d.b < 1.0) throw Error("powerlaw max weight must be >= 1");
  } else {
    throw Error("unknown weight distribution '" + name + "'");
  }
  return d;
}

std::string WeightDist::to_string() const {
  const char* name = kind == Kind::uniform ? "uniform" : "powerlaw";
  return std::string(name) + "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

double WeightDist::draw(Rng& rng) const {
  if (kind == Kind::uniform) {
    const double w = rng.uniform(a, b);
    return w < 1.0 ? 1.0 : w;
  }
  // Truncated Pareto on [1, b] with tail exponent a, by inverse CDF.
  const double u = rng.unit();
  const double t = 1.0 - std::pow(b, 1.0 - a);
  const double w = std::pow(1.0 - u * t, 1.0 / (1.0 - a));
  return std::min(std::max(w, 1.0), b);
}

InstanceKind instance_kind_from(const std::string& name) {
  if (name == "graph") return InstanceKind::graph;
  if (name == "hypergraph") return InstanceKind::hypergraph;
  if (name == "bipartite") return InstanceKind::bipartite;
  throw Error("unknown instance kind '" + name + "'");
}

std::string to_string(InstanceKind kind) {
  switch (kind) {
    case InstanceKind::graph: return "graph";
    case InstanceKind::hypergraph: return "hypergraph";
    case InstanceKind::bipartite: return "bipartite";
  }
  return "?";
}

std::string InstanceSpec::id() const {
  return to_string(kind) + "-n" + std::to_string(n) + "-m" + std::to_string(m) + "-seed" +
         std::to_string(seed);
}

namespace {

// m distinct pairs from a pool of `max_pairs`, by rejection (the callers keep
// density low) with a shuffle fallback for small dense pools.
std::vector<std::pair<int, int>> distinct_pairs(Rng& rng, long long max_pairs, int m,
                                                const std::function<std::pair<int, int>(Rng&)>& sample,
                                                const std::function<std::pair<int, int>(long long)>& unrank) {
  std::vector<std::pair<int, int>> out;
  if (2LL * m > max_pairs && max_pairs <= 2'000'000) {
    std::vector<long long> pool(max_pairs);
    for (long long i = 0; i < max_pairs; ++i) pool[i] = i;
    for (int i = 0; i < m; ++i) {
      const long long j = i + static_cast<long long>(rng.below(max_pairs - i));
      std::swap(pool[i], pool[j]);
      out.push_back(unrank(pool[i]));
    }
    return out;
  }
  std::set<std::pair<int, int>> seen;
  long long attempts = 0;
  while (static_cast<int>(out.size()) < m) {
    if (++attempts > 200LL * m + 1000)
      throw Error("could not place " + std::to_string(m) + " distinct edges");
    auto pr = sample(rng);
    if (seen.insert(pr).second) out.push_back(pr);
  }
  return out;
}

}  // namespace

WeightedHypergraph generate_instance(const InstanceSpec& spec) {
  if (spec.n < 0 || spec.m < 0) throw Error("instance sizes must be non-negative");
  Rng rng(spec.seed);
  WeightedHypergraph h;
  h.n = spec.n;

  std::vector<std::vector<int>> edge_sets;
  if (spec.kind == InstanceKind::graph || spec.kind == InstanceKind::bipartite) {
    h.s = 2;
    long long max_pairs;
    std::function<std::pair<int, int>(Rng&)> sample;
    std::function<std::pair<int, int>(long long)> unrank;
    if (spec.kind == InstanceKind::graph) {
      max_pairs = static_cast<long long>(spec.n) * (spec.n - 1) / 2;
      sample = [n = spec.n](Rng& r) {
        int u = static_cast<int>(r.below(n));
        int v = static_cast<int>(r.below(n - 1));
        if (v >= u) ++v;
        return std::pair<int, int>(std::min(u, v), std::max(u, v));
      };
      unrank = [n = spec.n](long long idx) {
        // pairs (u, v), u < v, ordered by u then v
        int u = 0;
        long long left = idx;
        while (left >= n - 1 - u) {
          left -= n - 1 - u;
          ++u;
        }
        return std::pair<int, int>(u, u + 1 + static_cast<int>(left));
      };
    } else {
      const int half = spec.n / 2;
      const int rest = spec.n - half;
      max_pairs = static_cast<long long>(half) * rest;
      sample = [half, rest](Rng& r) {
        int u = static_cast<int>(r.below(half));
        int v = half + static_cast<int>(r.below(rest));
        return std::pair<int, int>(u, v);
      };
      unrank = [half, rest](long long idx) {
        return std::pair<int, int>(static_cast<int>(idx / rest),
                                   half + static_cast<int>(idx % rest));
      };
    }
    if (spec.m > max_pairs)
      throw Error("kind " + to_string(spec.kind) + " with n=" + std::to_string(spec.n) +
                  " admits only " + std::to_string(max_pairs) + " distinct edges");
    for (auto [u, v] : distinct_pairs(rng, max_pairs, spec.m, sample, unrank))
      edge_sets.push_back({u, v});
  } else {
    if (spec.s < 2) throw Error("hypergraph cardinality bound must be at least 2");
    if (spec.m > 0 && spec.n < 2) throw Error("hypergraph needs at least 2 vertices");
    h.s = spec.s;
    std::set<std::vector<int>> seen;
    long long attempts = 0;
    while (static_cast<int>(edge_sets.size()) < spec.m) {
      if (++attempts > 200LL * spec.m + 1000)
        throw Error("could not place " + std::to_string(spec.m) + " distinct edges");
      const int size = static_cast<int>(rng.range(2, std::min(spec.s, spec.n)));
      std::vector<int> vs;
      while (static_cast<int>(vs.size()) < size) {
        const int v = static_cast<int>(rng.below(spec.n));
        if (std::find(vs.begin(), vs.end(), v) == vs.end()) vs.push_back(v);
      }
      std::sort(vs.begin(), vs.end());
      if (seen.insert(vs).second) edge_sets.push_back(vs);
    }
  }

  h.edges.reserve(edge_sets.size());
  for (auto& vs : edge_sets) {
    Edge e;
    e.vertices = std::move(vs);
    std::sort(e.vertices.begin(), e.vertices.end());
    e.weight = spec.dist.draw(rng);
    h.edges.push_back(std::move(e));
  }
  h.validate();
  return h;
}

VertexWeightedGraph random_vertex_weighted_graph(int n, int target_edges, int max_degree,
                                                 long long max_weight, std::uint64_t seed) {
  if (n < 0 || target_edges < 0 || max_degree < 0 || max_weight < 1)
    throw Error("bad vertex graph parameters");
  Rng rng(seed);
  std::vector<long long> weights(n);
  for (auto& w : weights) w = rng.range(1, max_weight);

  std::vector<int> degree(n, 0);
  std::set<std::pair<int, int>> seen;
  std::vector<std::pair<int, int>> edges;
  long long attempts = 0;
  while (static_cast<int>(edges.size()) < target_edges && attempts < 200LL * target_edges + 1000) {
    ++attempts;
    if (n < 2) break;
    int u = static_cast<int>(rng.below(n));
    int v = static_cast<int>(rng.below(n - 1));
    if (v >= u) ++v;
    const std::pair<int, int> pr(std::min(u, v), std::max(u, v));
    if (degree[pr.first] >= max_degree || degree[pr.second] >= max_degree) continue;
    if (!seen.insert(pr).second) continue;
    ++degree[pr.first];
    ++degree[pr.second];
    edges.push_back(pr);
  }
  return make_vertex_graph(n, std::move(weights), edges);
}

}  // namespace bandmatch
