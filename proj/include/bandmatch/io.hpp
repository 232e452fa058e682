#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "bandmatch/hypergraph.hpp"

namespace bandmatch {

// Hyperedge instance files:
//   h <n> <m> <s>
//   e <weight> <v1> ... <vk>        (exactly m lines)
//
// Vertex-weighted graph files:
//   g <n> <m>
//   w <vertex> <int-weight>         (one per vertex)
//   d <u> <v>                       (exactly m lines)
//
// Solution files:
//   value <total-weight>
//   m <edge-id>                     (matchings)
//   v <vertex-id>                   (independent sets)
//
// Blank lines and lines starting with '#' are ignored everywhere.
// All parse errors carry the offending line number.

WeightedHypergraph parse_instance(std::istream& in);
WeightedHypergraph parse_instance_file(const std::string& path);
std::string serialize_instance(const WeightedHypergraph& h);

VertexWeightedGraph parse_vertex_graph(std::istream& in);
VertexWeightedGraph parse_vertex_graph_file(const std::string& path);
std::string serialize_vertex_graph(const VertexWeightedGraph& g);

/// First non-blank record decides: 'h' or 'g'.
enum class InstanceFileKind { hypergraph, vertex_graph };
InstanceFileKind sniff_instance_kind(const std::string& path);

struct SolutionFile {
  double value = 0.0;
  std::vector<int> ids;       // edge ids or vertex ids
  bool vertex_set = false;    // true when the file used 'v' records
};

SolutionFile parse_solution(std::istream& in);
SolutionFile parse_solution_file(const std::string& path);
std::string serialize_matching(const WeightedHypergraph& h, const Matching& m);
std::string serialize_vertex_set(const VertexWeightedGraph& g, const std::vector<int>& vertices);

/// Shortest decimal form that parses back to exactly the same double.
std::string format_double(double v);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace bandmatch
