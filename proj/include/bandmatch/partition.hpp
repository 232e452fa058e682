#pragma once

#include "bandmatch/transform.hpp"

namespace bandmatch {

/**
 * Knobs of the shift cascade for accuracy eps and edge cardinality bound s:
 *   l = ceil(log_{1+eps}(s / eps))   levels per basic block
 *   k = ceil(1 / eps) + 1            blocks per period == number of shifts
 *
 * Two distinct weight levels l or more positions apart differ by a factor of
 * at least s/eps, so edges across a full block are negligible against each
 * other (the elimination argument relies on exactly this).
 */
struct CascadeParams {
  double eps = 0.0;
  int s = 2;
  int l = 0;
  int k = 0;

  bool operator==(const CascadeParams&) const = default;
};

CascadeParams compute_params(double eps, int s);

/// Distinct exponents of a rounded instance, heaviest first. Empty for m == 0.
std::vector<int> weight_levels(const RoundedInstance& r);

/**
 * One basic block: levels[level_begin, level_end) of the descending level
 * list. Non-gap blocks belong to large interval `interval` (1-based, heaviest
 * interval first); gap blocks carry interval == 0.
 */
struct BasicBlock {
  int level_begin = 0;
  int level_end = 0;
  bool gap = false;
  int interval = 0;

  bool operator==(const BasicBlock&) const = default;
};

/**
 * The block/gap structure for one shift x: blocks chunk the descending level
 * list l levels at a time (only the lightest block may be short), and block b
 * is a gap iff b == k-1-x (mod k). Maximal runs of non-gap blocks form the
 * large intervals, at most k-1 blocks each.
 */
struct ShiftPartition {
  int shift = 0;
  CascadeParams params;
  std::vector<int> levels;
  std::vector<BasicBlock> blocks;
  int interval_count = 0;

  /// Large-interval index of the level at `pos` in `levels`; 0 when gapped.
  int interval_of_level_pos(int pos) const;

  /// Positions [begin, end) of the levels covered by large interval j.
  std::pair<int, int> interval_level_range(int j) const;

  bool operator==(const ShiftPartition&) const = default;
};

ShiftPartition build_shift_partition(const std::vector<int>& levels, const CascadeParams& params,
                                     int shift);

}  // namespace bandmatch
