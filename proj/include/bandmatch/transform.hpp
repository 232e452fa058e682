#pragma once

#include "bandmatch/hypergraph.hpp"

namespace bandmatch {

enum class Execution { serial, parallel };

/// (1 + eps)^e, computed the same way everywhere so boundary checks agree.
double power_of_one_plus(double eps, int e);

/// Largest e with (1+eps)^e <= w, fixed up around the float log estimate so the
/// defining inequality holds exactly in double arithmetic. Requires w >= 1.
int floor_log_one_plus(double eps, double w);

/// Denominator D of eps when eps is (within 1e-9) a unit fraction 1/D; throws otherwise.
long long unit_fraction_denominator(double eps);

/// Nearest not-larger unit fraction: 1 / ceil(1/eps). Idempotent on unit fractions.
double snap_epsilon(double eps);

struct ClampResult {
  WeightedHypergraph graph;  // same topology, weights in [1, n/eps]
  double scale = 1.0;        // multiplier applied after clamping; 1 when untouched
};

/**
 * Weight-range reduction: when max weight W exceeds n/eps, raise every weight
 * below W*eps/n up to that threshold, then multiply all weights by n/(W*eps).
 * Instances already inside [*, n/eps] pass through unchanged with scale 1.
 */
ClampResult clamp_rescale(const WeightedHypergraph& h, double eps,
                          Execution exec = Execution::parallel);

/**
 * The instance after rounding each weight down to a power of (1+eps).
 * Rounded weight of edge i is (1+eps)^exponents[i]; original_weights keeps
 * the pre-rounding values for final scoring.
 */
struct RoundedInstance {
  WeightedHypergraph base;   // the instance that was rounded (weights untouched)
  double eps = 0.0;
  std::vector<int> exponents;            // >= 0, aligned with base.edges
  std::vector<double> original_weights;  // == base edge weights

  double rounded_weight(int edge) const { return power_of_one_plus(eps, exponents[edge]); }
};

/// Rounds every weight down to a power of (1+eps); requires weights >= 1.
RoundedInstance round_to_powers(WeightedHypergraph h, double eps,
                                Execution exec = Execution::parallel);

struct IntegerizedInstance {
  WeightedHypergraph graph;   // weights are integers stored exactly in doubles
  long long denominator = 1;  // D = 1/eps
};

/**
 * Rounds weights down to multiples of eps = 1/D and stores them scaled by D,
 * i.e. w -> floor(w * D). Requires eps to be a unit fraction; weights >= 1
 * map to integers >= D.
 */
IntegerizedInstance integerize(const WeightedHypergraph& h, double eps);

}  // namespace bandmatch
