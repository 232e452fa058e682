#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "bandmatch/hypergraph.hpp"

namespace bandmatch {

/**
 * Deterministic random source. All derived draws are built from raw
 * mt19937_64 output with fixed arithmetic, so a seed maps to the same
 * sequence on every platform.
 */
struct Rng {
  std::mt19937_64 engine;

  explicit Rng(std::uint64_t seed) : engine(seed) {}

  std::uint64_t bits() { return engine(); }

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? bits() % n : 0; }

  /// Uniform in [lo, hi] inclusive.
  long long range(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }
};

struct WeightDist {
  enum class Kind { uniform, powerlaw };
  Kind kind = Kind::uniform;
  double a = 1.0;  // uniform: lo,  powerlaw: exponent alpha > 1
  double b = 1.0;  // uniform: hi,  powerlaw: max weight

  /// "uniform(lo,hi)" or "powerlaw(alpha,wmax)".
  static WeightDist parse(const std::string& text);
  std::string to_string() const;

  double draw(Rng& rng) const;
};

enum class InstanceKind { graph, hypergraph, bipartite };

InstanceKind instance_kind_from(const std::string& name);
std::string to_string(InstanceKind kind);

struct InstanceSpec {
  InstanceKind kind = InstanceKind::graph;
  int n = 0;
  int m = 0;
  int s = 2;  // used by kind == hypergraph (edge sizes drawn in [2, s])
  WeightDist dist;
  std::uint64_t seed = 0;

  std::string id() const;
};

/// Same spec, same bytes: generation is fully deterministic per seed.
WeightedHypergraph generate_instance(const InstanceSpec& spec);

/// Random graph with a hard degree cap and integer weights in [1, max_weight].
VertexWeightedGraph random_vertex_weighted_graph(int n, int target_edges, int max_degree,
                                                 long long max_weight, std::uint64_t seed);

}  // namespace bandmatch
