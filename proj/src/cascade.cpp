#include "bandmatch/cascade.hpp"

#include <algorithm>
#include <chrono>
#include <exception>

namespace bandmatch {

namespace {

using Clock = std::chrono::steady_clock;

std::int64_t elapsed_us(Clock::time_point from, Clock::time_point to) {
  return std::chrono::duration_cast<std::chrono::microseconds>(to - from).count();
}

struct SubInstance {
  WeightedHypergraph graph;
  std::vector<int> global_edge;  // local edge id -> edge id in the full instance
  double weight_bound = 1.0;
};

}  // namespace

Matching run_shift(const RoundedInstance& r, const ShiftPartition& p, const Solver& solver,
                   std::vector<TraceRecord>* trace) {
  const WeightedHypergraph& base = r.base;
  const int m = base.edge_count();

  // Exponent -> position in the descending level list.
  std::vector<int> level_pos;
  if (!p.levels.empty()) {
    level_pos.assign(p.levels.front() + 1, -1);
    for (int i = 0; i < static_cast<int>(p.levels.size()); ++i) level_pos[p.levels[i]] = i;
  }

  // An edge starts alive iff its level falls into some large interval; gap
  // edges never take part in this shift.
  std::vector<char> alive(m, 0);
  std::vector<std::vector<int>> interval_edges(p.interval_count + 1);
  for (int id = 0; id < m; ++id) {
    const int e = r.exponents[id];
    const int pos = (e < static_cast<int>(level_pos.size())) ? level_pos[e] : -1;
    if (pos < 0) throw Error("partition does not cover exponent " + std::to_string(e));
    const int j = p.interval_of_level_pos(pos);
    if (j > 0) {
      alive[id] = 1;
      interval_edges[j].push_back(id);
    }
  }

  std::vector<std::vector<int>> incident(base.n);
  for (int id = 0; id < m; ++id)
    for (int v : base.edges[id].vertices) incident[v].push_back(id);

  std::vector<int> local_id(base.n, -1);
  std::vector<int> touched;

  Matching result;
  std::vector<int> offered;
  for (int j = 1; j <= p.interval_count; ++j) {
    offered.clear();
    int e_min = 0, e_max = 0;
    for (int id : interval_edges[j]) {
      if (!alive[id]) continue;
      const int e = r.exponents[id];
      if (offered.empty()) {
        e_min = e_max = e;
      } else {
        e_min = std::min(e_min, e);
        e_max = std::max(e_max, e);
      }
      offered.push_back(id);
    }
    if (offered.empty()) continue;

    // Compact the touched vertices and normalize by the interval minimum so
    // the black box sees weights in [1, weight_bound].
    SubInstance sub;
    sub.graph.s = base.s;
    sub.global_edge = offered;
    sub.weight_bound = power_of_one_plus(r.eps, e_max - e_min);
    touched.clear();
    for (int id : offered) {
      Edge e;
      e.weight = power_of_one_plus(r.eps, r.exponents[id] - e_min);
      for (int v : base.edges[id].vertices) {
        if (local_id[v] < 0) {
          local_id[v] = static_cast<int>(touched.size());
          touched.push_back(v);
        }
        e.vertices.push_back(local_id[v]);
      }
      std::sort(e.vertices.begin(), e.vertices.end());
      sub.graph.edges.push_back(std::move(e));
    }
    sub.graph.n = static_cast<int>(touched.size());

    Matching picked;
    try {
      picked = solver.solve(sub.graph, sub.weight_bound);
    } catch (const Error& err) {
      for (int v : touched) local_id[v] = -1;
      throw Error("solver '" + solver.name + "' failed on sub-instance (shift " +
                  std::to_string(p.shift) + ", interval " + std::to_string(j) + "): " + err.what());
    }
    if (!is_valid_matching(sub.graph, picked.edge_ids))
      throw Error("solver '" + solver.name + "' returned an invalid matching on sub-instance (shift " +
                  std::to_string(p.shift) + ", interval " + std::to_string(j) + ")");

    if (trace) {
      TraceRecord rec;
      rec.shift = p.shift;
      rec.interval = j;
      rec.edges = static_cast<int>(offered.size());
      rec.vertices = sub.graph.n;
      rec.sub_weight = matching_weight(sub.graph, picked);
      trace->push_back(rec);
    }

    for (int local : picked.edge_ids) {
      const int id = sub.global_edge[local];
      result.edge_ids.push_back(id);
      result.provenance.push_back({p.shift, j});
      // Everything sharing a vertex with the new pick dies, across all
      // remaining intervals. A vertex is matched at most once per shift, so
      // each incidence list is swept at most once.
      for (int v : base.edges[id].vertices)
        for (int other : incident[v]) alive[other] = 0;
    }
    for (int v : touched) local_id[v] = -1;
  }

  // Keep ids ascending with their tags attached.
  std::vector<int> order(result.edge_ids.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return result.edge_ids[a] < result.edge_ids[b]; });
  Matching sorted;
  sorted.edge_ids.reserve(order.size());
  sorted.provenance.reserve(order.size());
  for (int i : order) {
    sorted.edge_ids.push_back(result.edge_ids[i]);
    sorted.provenance.push_back(result.provenance[i]);
  }

  if (!is_valid_matching(base, sorted.edge_ids))
    throw Error("shift " + std::to_string(p.shift) + " produced an invalid matching");
  return sorted;
}

namespace {

struct ShiftWork {
  ShiftOutcome outcome;
  std::vector<TraceRecord> trace;
  std::exception_ptr error;
};

void run_shifts_serial(const WeightedHypergraph& original, const RoundedInstance& r,
                       const std::vector<ShiftPartition>& parts, const Solver& solver,
                       bool want_trace, std::vector<ShiftWork>& work) {
  for (std::size_t x = 0; x < parts.size(); ++x) {
    try {
      Matching m = run_shift(r, parts[x], solver, want_trace ? &work[x].trace : nullptr);
      double w = matching_weight(original, m);
      work[x].outcome = {static_cast<int>(x), std::move(m), w};
    } catch (...) {
      work[x].error = std::current_exception();
    }
  }
}

void run_shifts_parallel(const WeightedHypergraph& original, const RoundedInstance& r,
                         const std::vector<ShiftPartition>& parts, const Solver& solver,
                         bool want_trace, std::vector<ShiftWork>& work) {
  const long long k = static_cast<long long>(parts.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (long long x = 0; x < k; ++x) {
    try {
      Matching m = run_shift(r, parts[x], solver, want_trace ? &work[x].trace : nullptr);
      double w = matching_weight(original, m);
      work[x].outcome = {static_cast<int>(x), std::move(m), w};
    } catch (...) {
      work[x].error = std::current_exception();
    }
  }
}

}  // namespace

CascadeResult reduce_and_solve(const WeightedHypergraph& h, double eps, const Solver& solver,
                               const CascadeOptions& options) {
  h.validate();
  if (!solver.solve) throw Error("solver '" + solver.name + "' has no solve procedure");

  CascadeResult res;
  res.eps = snap_epsilon(eps);

  const auto t0 = Clock::now();
  ClampResult clamped = clamp_rescale(h, res.eps, options.execution);
  res.clamp_scale = clamped.scale;
  RoundedInstance rounded = round_to_powers(std::move(clamped.graph), res.eps, options.execution);
  const auto t1 = Clock::now();

  res.params = compute_params(res.eps, std::max(2, h.s));
  const std::vector<int> levels = weight_levels(rounded);
  std::vector<ShiftPartition> parts;
  parts.reserve(res.params.k);
  for (int x = 0; x < res.params.k; ++x)
    parts.push_back(build_shift_partition(levels, res.params, x));
  const auto t2 = Clock::now();

  std::vector<ShiftWork> work(res.params.k);
  const bool want_trace = options.trace != nullptr;
  if (options.execution == Execution::parallel)
    run_shifts_parallel(h, rounded, parts, solver, want_trace, work);
  else
    run_shifts_serial(h, rounded, parts, solver, want_trace, work);
  for (ShiftWork& w : work)
    if (w.error) std::rethrow_exception(w.error);
  const auto t3 = Clock::now();

  res.per_shift.reserve(work.size());
  for (ShiftWork& w : work) res.per_shift.push_back(std::move(w.outcome));

  res.best_shift = 0;
  for (int x = 1; x < static_cast<int>(res.per_shift.size()); ++x)
    if (res.per_shift[x].original_weight > res.per_shift[res.best_shift].original_weight)
      res.best_shift = x;
  res.best = res.per_shift[res.best_shift].matching;

  if (options.trace)
    for (ShiftWork& w : work)
      options.trace->insert(options.trace->end(), w.trace.begin(), w.trace.end());

  if (options.times) {
    options.times->transform_us = elapsed_us(t0, t1);
    options.times->partition_us = elapsed_us(t1, t2);
    options.times->solve_us = elapsed_us(t2, t3);
  }
  return res;
}

}  // namespace bandmatch
