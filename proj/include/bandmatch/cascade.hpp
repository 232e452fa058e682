#pragma once

#include <cstdint>

#include "bandmatch/partition.hpp"
#include "bandmatch/solvers.hpp"

namespace bandmatch {

/// One sub-solve inside a shift, for --trace output and diagnostics.
struct TraceRecord {
  int shift = 0;
  int interval = 0;
  int edges = 0;       // edges offered to the black box
  int vertices = 0;    // vertices after compaction
  double sub_weight = 0.0;  // matching weight in the normalized sub-instance

  bool operator==(const TraceRecord&) const = default;
};

struct PhaseTimes {
  std::int64_t transform_us = 0;
  std::int64_t partition_us = 0;
  std::int64_t solve_us = 0;
};

struct CascadeOptions {
  Execution execution = Execution::parallel;
  PhaseTimes* times = nullptr;                 // optional, filled when non-null
  std::vector<TraceRecord>* trace = nullptr;   // optional, (shift, interval) ascending
};

struct ShiftOutcome {
  int shift = 0;
  Matching matching;       // provenance-tagged with (shift, interval)
  double original_weight = 0.0;

  bool operator==(const ShiftOutcome&) const = default;
};

/**
 * Result of the full reduction. `best` is the heaviest per-shift matching
 * under the *original* input weights, ties broken by lowest shift.
 */
struct CascadeResult {
  Matching best;
  int best_shift = 0;
  std::vector<ShiftOutcome> per_shift;  // indexed by shift x = 0..k-1
  CascadeParams params;
  double clamp_scale = 1.0;
  double eps = 0.0;  // snapped value actually used

  bool operator==(const CascadeResult&) const = default;
};

/**
 * Runs one shift of the cascade: walks the large intervals heaviest first,
 * offers the still-alive edges of each interval to the black box (weights
 * divided by the interval minimum), keeps the union of the sub-matchings and
 * removes every edge touching a matched vertex. Gap edges are never offered.
 */
Matching run_shift(const RoundedInstance& r, const ShiftPartition& p, const Solver& solver,
                   std::vector<TraceRecord>* trace = nullptr);

/**
 * Full pipeline: snap eps to a unit fraction, clamp-rescale into [1, n/eps],
 * round weights down to powers of (1+eps), run every shift x = 0..k-1 and
 * return the winner under original weights. The serial and parallel
 * executions produce identical results.
 */
CascadeResult reduce_and_solve(const WeightedHypergraph& h, double eps, const Solver& solver,
                               const CascadeOptions& options = {});

}  // namespace bandmatch
