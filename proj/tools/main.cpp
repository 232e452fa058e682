#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bandmatch/experiment.hpp"
#include "bandmatch/io.hpp"
#include "bandmatch/mwis.hpp"

namespace {

using namespace bandmatch;

int cmd_generate(const std::string& kind, int n, int m, int s, const std::string& dist,
                 std::uint64_t seed, const std::string& output) {
  InstanceSpec spec;
  spec.kind = instance_kind_from(kind);
  spec.n = n;
  spec.m = m;
  spec.s = s;
  spec.dist = WeightDist::parse(dist);
  spec.seed = seed;
  write_text_file(output, serialize_instance(generate_instance(spec)));
  std::printf("wrote %s (%s)\n", output.c_str(), spec.id().c_str());
  return 0;
}

void print_trace(const std::vector<TraceRecord>& trace) {
  for (const TraceRecord& t : trace)
    std::printf("{\"shift\":%d,\"interval\":%d,\"edges\":%d,\"vertices\":%d,\"sub_weight\":%s}\n",
                t.shift, t.interval, t.edges, t.vertices, format_double(t.sub_weight).c_str());
}

int cmd_solve(double eps, const std::string& solver_name, const std::string& input,
              const std::string& output, bool trace, bool serial) {
  const WeightedHypergraph h = parse_instance_file(input);
  const Solver& solver = find_solver(solver_name);

  std::vector<TraceRecord> records;
  CascadeOptions options;
  options.execution = serial ? Execution::serial : Execution::parallel;
  if (trace) options.trace = &records;

  const CascadeResult res = reduce_and_solve(h, eps, solver, options);
  if (trace) print_trace(records);
  write_text_file(output, serialize_matching(h, res.best));
  std::printf("weight %s (eps %s, shift %d, %zu edges)\n",
              format_double(matching_weight(h, res.best)).c_str(),
              format_double(res.eps).c_str(), res.best_shift, res.best.edge_ids.size());
  return 0;
}

int cmd_mwis(double eps, const std::string& solver_name, const std::string& input,
             const std::string& output, bool serial) {
  const VertexWeightedGraph g = parse_vertex_graph_file(input);
  CascadeOptions options;
  options.execution = serial ? Execution::serial : Execution::parallel;
  const MwisResult res = mwis_via_duality(g, eps, solver_name, options);
  write_text_file(output, serialize_vertex_set(g, res.vertices));
  std::printf("weight %lld (%zu vertices)\n", res.weight, res.vertices.size());
  return 0;
}

int cmd_verify(const std::string& instance_path, const std::string& solution_path) {
  const SolutionFile sol = parse_solution_file(solution_path);
  double recomputed = 0.0;

  if (sniff_instance_kind(instance_path) == InstanceFileKind::hypergraph) {
    const WeightedHypergraph h = parse_instance_file(instance_path);
    if (sol.vertex_set) {
      std::printf("INVALID: instance is a hypergraph but the solution lists vertices\n");
      return 1;
    }
    std::vector<char> used(h.n, 0), seen(h.edges.size(), 0);
    for (int id : sol.ids) {
      if (id < 0 || id >= h.edge_count()) {
        std::printf("INVALID: unknown edge id %d\n", id);
        return 1;
      }
      if (seen[id]) {
        std::printf("INVALID: edge %d listed twice\n", id);
        return 1;
      }
      seen[id] = 1;
      for (int v : h.edges[id].vertices) {
        if (used[v]) {
          std::printf("INVALID: vertex %d covered twice\n", v);
          return 1;
        }
        used[v] = 1;
      }
    }
    std::vector<int> ids = sol.ids;
    std::sort(ids.begin(), ids.end());
    for (int id : ids) recomputed += h.edges[id].weight;
  } else {
    const VertexWeightedGraph g = parse_vertex_graph_file(instance_path);
    if (!sol.vertex_set && !sol.ids.empty()) {
      std::printf("INVALID: instance is a vertex-weighted graph but the solution lists edges\n");
      return 1;
    }
    if (!is_independent_set(g, sol.ids)) {
      std::printf("INVALID: selected vertices are not an independent set\n");
      return 1;
    }
    for (int v : sol.ids) recomputed += static_cast<double>(g.weights[v]);
  }

  const double tol = 1e-9 * std::max({1.0, std::fabs(recomputed), std::fabs(sol.value)});
  if (std::fabs(recomputed - sol.value) > tol) {
    std::printf("MISMATCH: declared %s recomputed %s\n", format_double(sol.value).c_str(),
                format_double(recomputed).c_str());
    return 1;
  }
  std::printf("OK weight %s (%zu records)\n", format_double(recomputed).c_str(), sol.ids.size());
  return 0;
}

int cmd_bench_config(const std::string& config_path, const std::string& output, int jobs_override) {
  ExperimentConfig cfg = ExperimentConfig::parse_file(config_path);
  if (jobs_override > 0) cfg.jobs = jobs_override;
  const std::string csv = run_experiment(cfg);
  if (output.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text_file(output, csv);
    std::printf("wrote %s\n", output.c_str());
  }
  return 0;
}

int cmd_bench_scaling(const ScalingOptions& options, const std::string& output) {
  const std::vector<ScalingRow> rows = run_scaling_bench(options);
  const std::string csv = scaling_csv(rows);
  if (output.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text_file(output, csv);
    std::printf("wrote %s\n", output.c_str());
  }
  return 0;
}

int cmd_partition_debug(double eps, const std::string& input, int only_shift) {
  const WeightedHypergraph h = parse_instance_file(input);
  const double snapped = snap_epsilon(eps);
  const ClampResult clamped = clamp_rescale(h, snapped);
  const RoundedInstance rounded = round_to_powers(clamped.graph, snapped);
  const CascadeParams params = compute_params(snapped, std::max(2, h.s));
  const std::vector<int> levels = weight_levels(rounded);

  std::printf("eps %s (requested %s)  s %d  l %d  k %d  clamp_scale %s\n",
              format_double(snapped).c_str(), format_double(eps).c_str(), params.s, params.l,
              params.k, format_double(clamped.scale).c_str());
  std::printf("%zu distinct levels", levels.size());
  if (!levels.empty()) std::printf(", exponents %d (heaviest) .. %d (lightest)", levels.front(), levels.back());
  std::printf("\n");

  for (int x = 0; x < params.k; ++x) {
    if (only_shift >= 0 && x != only_shift) continue;
    const ShiftPartition p = build_shift_partition(levels, params, x);
    std::printf("shift %d: %d large interval(s)\n", x, p.interval_count);
    for (std::size_t b = 0; b < p.blocks.size(); ++b) {
      const BasicBlock& block = p.blocks[b];
      const int hi = p.levels[block.level_begin];
      const int lo = p.levels[block.level_end - 1];
      const std::string tag =
          block.gap ? std::string("GAP") : "interval " + std::to_string(block.interval);
      std::printf("  block %zu: exponents %d..%d (%d levels) %s\n", b, hi, lo,
                  block.level_end - block.level_begin, tag.c_str());
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weight-banded approximate matching for graphs and hypergraphs"};
  app.require_subcommand(1);

  // generate
  std::string g_kind = "graph", g_dist = "uniform(1,1000000)", g_output;
  int g_n = 0, g_m = 0, g_s = 3;
  std::uint64_t g_seed = 1;
  auto* gen = app.add_subcommand("generate", "write a random instance file");
  gen->add_option("--kind", g_kind, "graph | hypergraph | bipartite")->capture_default_str();
  gen->add_option("--n", g_n, "vertex count")->required();
  gen->add_option("--m", g_m, "edge count")->required();
  gen->add_option("--s", g_s, "max edge size (hypergraph)")->capture_default_str();
  gen->add_option("--dist", g_dist, "uniform(lo,hi) or powerlaw(alpha,wmax)")->capture_default_str();
  gen->add_option("--seed", g_seed, "random seed")->capture_default_str();
  gen->add_option("--output", g_output, "output file")->required();

  // solve
  double s_eps = 0.1;
  std::string s_solver = "greedy", s_input, s_output;
  bool s_trace = false, s_serial = false;
  auto* solve = app.add_subcommand("solve", "approximate max-weight matching");
  solve->add_option("--eps", s_eps, "accuracy parameter in (0,1)")->required();
  solve->add_option("--solver", s_solver, "greedy | exact")->required();
  solve->add_option("--input", s_input, "instance file")->required();
  solve->add_option("--output", s_output, "matching file")->required();
  solve->add_flag("--trace", s_trace, "print per-interval JSON lines");
  solve->add_flag("--serial", s_serial, "use the serial reference lane");

  // mwis
  double w_eps = 0.1;
  std::string w_solver = "exact", w_input, w_output;
  bool w_serial = false;
  auto* mwis = app.add_subcommand("mwis", "max-weight independent set via the matching reduction");
  mwis->add_option("--eps", w_eps, "accuracy parameter in (0,1)")->required();
  mwis->add_option("--solver", w_solver, "exact | greedy | dup-greedy")->required();
  mwis->add_option("--input", w_input, "vertex-weighted graph file")->required();
  mwis->add_option("--output", w_output, "vertex set file")->required();
  mwis->add_flag("--serial", w_serial, "use the serial reference lane");

  // verify
  std::string v_instance, v_solution;
  auto* verify = app.add_subcommand("verify", "check a solution file against its instance");
  verify->add_option("instance", v_instance, "instance file")->required();
  verify->add_option("solution", v_solution, "matching or vertex set file")->required();

  // bench
  std::string b_config, b_output;
  int b_jobs = 0, b_runs = 5;
  bool b_scaling = false;
  double b_eps = 0.1;
  std::string b_solver = "greedy";
  std::vector<int> b_sizes = {10000, 20000, 40000, 80000};
  std::uint64_t b_seed = 20240901;
  auto* bench = app.add_subcommand("bench", "config-driven experiments or the scaling benchmark");
  bench->add_option("--config", b_config, "experiment config file");
  bench->add_option("--output", b_output, "CSV output file (stdout when omitted)");
  bench->add_option("--jobs", b_jobs, "override config jobs");
  bench->add_flag("--scaling", b_scaling, "run the doubling benchmark (serial vs OpenMP lane)");
  bench->add_option("--eps", b_eps, "scaling: accuracy parameter")->capture_default_str();
  bench->add_option("--solver", b_solver, "scaling: black box")->capture_default_str();
  bench->add_option("--sizes", b_sizes, "scaling: edge counts")->delimiter(',');
  bench->add_option("--runs", b_runs, "scaling: timed runs per size")->capture_default_str();
  bench->add_option("--seed", b_seed, "scaling: base seed")->capture_default_str();

  // partition-debug
  double p_eps = 0.1;
  std::string p_input;
  int p_shift = -1;
  auto* pdebug = app.add_subcommand("partition-debug", "print the block/gap table per shift");
  pdebug->add_option("--eps", p_eps, "accuracy parameter")->required();
  pdebug->add_option("--input", p_input, "instance file")->required();
  pdebug->add_option("--shift", p_shift, "limit output to one shift");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) return cmd_generate(g_kind, g_n, g_m, g_s, g_dist, g_seed, g_output);
    if (solve->parsed()) return cmd_solve(s_eps, s_solver, s_input, s_output, s_trace, s_serial);
    if (mwis->parsed()) return cmd_mwis(w_eps, w_solver, w_input, w_output, w_serial);
    if (verify->parsed()) return cmd_verify(v_instance, v_solution);
    if (bench->parsed()) {
      if (!b_config.empty()) return cmd_bench_config(b_config, b_output, b_jobs);
      if (b_scaling) {
        ScalingOptions options;
        options.eps = b_eps;
        options.solver = b_solver;
        options.sizes = b_sizes;
        options.runs = b_runs;
        options.seed = b_seed;
        return cmd_bench_scaling(options, b_output);
      }
      std::fprintf(stderr, "bench needs --config or --scaling\n");
      return 2;
    }
    if (pdebug->parsed()) return cmd_partition_debug(p_eps, p_input, p_shift);
  } catch (const std::exception& ex) {
    std::fprintf(stderr, "error: %s\n", ex.what());
    return 2;
  }
  return 2;
}
