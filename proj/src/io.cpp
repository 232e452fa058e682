#include "bandmatch/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <sstream>

namespace bandmatch {

namespace {

[[noreturn]] void fail(int line, const std::string& what) {
  throw Error("line " + std::to_string(line) + ": " + what);
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

long long parse_int(const std::string& tok, int line, const char* what) {
  long long v = 0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) fail(line, std::string("bad ") + what + " '" + tok + "'");
  return v;
}

double parse_real(const std::string& tok, int line, const char* what) {
  double v = 0.0;
  auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || p != tok.data() + tok.size()) fail(line, std::string("bad ") + what + " '" + tok + "'");
  if (!std::isfinite(v)) fail(line, std::string(what) + " must be finite");
  return v;
}

// Yields (line_number, tokens) for each non-blank, non-comment line.
struct LineReader {
  std::istream& in;
  int line_no = 0;

  bool next(std::vector<std::string>& tokens, int& line) {
    std::string raw;
    while (std::getline(in, raw)) {
      ++line_no;
      if (!raw.empty() && raw[0] == '#') continue;
      tokens = split_tokens(raw);
      if (tokens.empty()) continue;
      line = line_no;
      return true;
    }
    return false;
  }
};

}  // namespace

WeightedHypergraph parse_instance(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  int line = 0;

  if (!reader.next(tok, line)) throw Error("empty instance file");
  if (tok[0] != "h" || tok.size() != 4) fail(line, "expected header 'h <n> <m> <s>'");
  long long n = parse_int(tok[1], line, "vertex count");
  long long m = parse_int(tok[2], line, "edge count");
  long long s = parse_int(tok[3], line, "cardinality bound");
  if (n < 0 || m < 0) fail(line, "counts must be non-negative");
  if (s < 1) fail(line, "cardinality bound must be at least 1");

  WeightedHypergraph h;
  h.n = static_cast<int>(n);
  h.s = static_cast<int>(s);
  h.edges.reserve(static_cast<std::size_t>(m));

  while (reader.next(tok, line)) {
    if (tok[0] != "e") fail(line, "expected 'e <weight> <v1> ...'");
    if (static_cast<long long>(h.edges.size()) == m) fail(line, "more than " + std::to_string(m) + " edge lines");
    if (tok.size() < 3) fail(line, "edge needs a weight and at least one vertex");
    Edge e;
    e.weight = parse_real(tok[1], line, "weight");
    if (e.weight < 1.0) fail(line, "weight below 1: " + tok[1]);
    for (std::size_t i = 2; i < tok.size(); ++i) {
      long long v = parse_int(tok[i], line, "vertex id");
      if (v < 0 || v >= n) fail(line, "vertex id " + tok[i] + " out of range [0, " + std::to_string(n) + ")");
      e.vertices.push_back(static_cast<int>(v));
    }
    if (static_cast<long long>(e.vertices.size()) > s)
      fail(line, "edge has " + std::to_string(e.vertices.size()) + " vertices, bound is " + std::to_string(s));
    std::sort(e.vertices.begin(), e.vertices.end());
    if (std::adjacent_find(e.vertices.begin(), e.vertices.end()) != e.vertices.end())
      fail(line, "duplicate vertex within edge");
    h.edges.push_back(std::move(e));
  }
  if (static_cast<long long>(h.edges.size()) != m)
    throw Error("expected " + std::to_string(m) + " edge lines, found " + std::to_string(h.edges.size()));
  h.validate();
  return h;
}

std::string serialize_instance(const WeightedHypergraph& h) {
  std::string out;
  out += "h " + std::to_string(h.n) + " " + std::to_string(h.edge_count()) + " " + std::to_string(h.s) + "\n";
  for (const Edge& e : h.edges) {
    out += "e " + format_double(e.weight);
    for (int v : e.vertices) out += " " + std::to_string(v);
    out += "\n";
  }
  return out;
}

VertexWeightedGraph parse_vertex_graph(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  int line = 0;

  if (!reader.next(tok, line)) throw Error("empty graph file");
  if (tok[0] != "g" || tok.size() != 3) fail(line, "expected header 'g <n> <m>'");
  long long n = parse_int(tok[1], line, "vertex count");
  long long m = parse_int(tok[2], line, "edge count");
  if (n < 0 || m < 0) fail(line, "counts must be non-negative");

  std::vector<long long> weights(n, 0);
  std::vector<char> have_weight(n, 0);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(static_cast<std::size_t>(m));

  while (reader.next(tok, line)) {
    if (tok[0] == "w") {
      if (tok.size() != 3) fail(line, "expected 'w <vertex> <weight>'");
      long long v = parse_int(tok[1], line, "vertex id");
      long long w = parse_int(tok[2], line, "weight");
      if (v < 0 || v >= n) fail(line, "vertex id out of range");
      if (have_weight[v]) fail(line, "duplicate weight for vertex " + tok[1]);
      if (w < 1) fail(line, "weight must be a positive integer");
      weights[v] = w;
      have_weight[v] = 1;
    } else if (tok[0] == "d") {
      if (tok.size() != 3) fail(line, "expected 'd <u> <v>'");
      long long u = parse_int(tok[1], line, "vertex id");
      long long v = parse_int(tok[2], line, "vertex id");
      if (u < 0 || u >= n || v < 0 || v >= n) fail(line, "vertex id out of range");
      if (u == v) fail(line, "self loop");
      if (static_cast<long long>(edges.size()) == m) fail(line, "more than " + std::to_string(m) + " edge lines");
      edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    } else {
      fail(line, "expected a 'w' or 'd' record");
    }
  }
  for (long long v = 0; v < n; ++v)
    if (!have_weight[v]) throw Error("missing weight for vertex " + std::to_string(v));
  if (static_cast<long long>(edges.size()) != m)
    throw Error("expected " + std::to_string(m) + " edge lines, found " + std::to_string(edges.size()));
  return make_vertex_graph(static_cast<int>(n), std::move(weights), edges);
}

std::string serialize_vertex_graph(const VertexWeightedGraph& g) {
  std::string out;
  out += "g " + std::to_string(g.n) + " " + std::to_string(g.edge_count()) + "\n";
  for (int v = 0; v < g.n; ++v)
    out += "w " + std::to_string(v) + " " + std::to_string(g.weights[v]) + "\n";
  for (int v = 0; v < g.n; ++v)
    for (int u : g.adjacency[v])
      if (v < u) out += "d " + std::to_string(v) + " " + std::to_string(u) + "\n";
  return out;
}

InstanceFileKind sniff_instance_kind(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  LineReader reader{in};
  std::vector<std::string> tok;
  int line = 0;
  if (!reader.next(tok, line)) throw Error("empty instance file '" + path + "'");
  if (tok[0] == "h") return InstanceFileKind::hypergraph;
  if (tok[0] == "g") return InstanceFileKind::vertex_graph;
  fail(line, "unknown instance header '" + tok[0] + "'");
}

SolutionFile parse_solution(std::istream& in) {
  LineReader reader{in};
  std::vector<std::string> tok;
  int line = 0;

  if (!reader.next(tok, line)) throw Error("empty solution file");
  if (tok[0] != "value" || tok.size() != 2) fail(line, "expected 'value <total-weight>'");
  SolutionFile sol;
  sol.value = parse_real(tok[1], line, "value");

  bool saw_kind = false;
  while (reader.next(tok, line)) {
    if ((tok[0] != "m" && tok[0] != "v") || tok.size() != 2) fail(line, "expected 'm <edge-id>' or 'v <vertex-id>'");
    bool vertex = tok[0] == "v";
    if (saw_kind && vertex != sol.vertex_set) fail(line, "mixed 'm' and 'v' records");
    sol.vertex_set = vertex;
    saw_kind = true;
    sol.ids.push_back(static_cast<int>(parse_int(tok[1], line, "id")));
  }
  return sol;
}

std::string serialize_matching(const WeightedHypergraph& h, const Matching& m) {
  std::string out = "value " + format_double(matching_weight(h, m)) + "\n";
  std::vector<int> ids = m.edge_ids;
  std::sort(ids.begin(), ids.end());
  for (int id : ids) out += "m " + std::to_string(id) + "\n";
  return out;
}

std::string serialize_vertex_set(const VertexWeightedGraph& g, const std::vector<int>& vertices) {
  std::string out = "value " + std::to_string(vertex_set_weight(g, vertices)) + "\n";
  std::vector<int> vs = vertices;
  std::sort(vs.begin(), vs.end());
  for (int v : vs) out += "v " + std::to_string(v) + "\n";
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

WeightedHypergraph parse_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_instance(in);
}

VertexWeightedGraph parse_vertex_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_vertex_graph(in);
}

SolutionFile parse_solution_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return parse_solution(in);
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("write failed for '" + path + "'");
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bandmatch
