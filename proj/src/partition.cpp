#include "bandmatch/partition.hpp"

#include <algorithm>
#include <cmath>

namespace bandmatch {

CascadeParams compute_params(double eps, int s) {
  if (s < 2) throw Error("edge cardinality bound must be at least 2");
  const long long d = unit_fraction_denominator(eps);

  CascadeParams p;
  p.eps = eps;
  p.s = s;
  p.k = static_cast<int>(d) + 1;

  // Smallest l with (1+eps)^l >= s/eps, fixed up around the float estimate.
  const double target = static_cast<double>(s) / eps;
  int l = static_cast<int>(std::ceil(std::log(target) / std::log1p(eps)));
  if (l < 1) l = 1;
  while (l > 1 && power_of_one_plus(eps, l - 1) >= target) --l;
  while (power_of_one_plus(eps, l) < target) ++l;
  p.l = l;
  return p;
}

std::vector<int> weight_levels(const RoundedInstance& r) {
  std::vector<int> levels = r.exponents;
  std::sort(levels.begin(), levels.end(), std::greater<int>());
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  return levels;
}

int ShiftPartition::interval_of_level_pos(int pos) const {
  if (pos < 0 || pos >= static_cast<int>(levels.size())) return 0;
  return blocks[pos / params.l].interval;
}

std::pair<int, int> ShiftPartition::interval_level_range(int j) const {
  int begin = -1, end = -1;
  for (const BasicBlock& b : blocks) {
    if (b.interval != j) continue;
    if (begin < 0) begin = b.level_begin;
    end = b.level_end;
  }
  if (begin < 0) throw Error("no such large interval: " + std::to_string(j));
  return {begin, end};
}

ShiftPartition build_shift_partition(const std::vector<int>& levels, const CascadeParams& params,
                                     int shift) {
  if (shift < 0 || shift >= params.k)
    throw Error("shift " + std::to_string(shift) + " outside [0, " + std::to_string(params.k) + ")");
  for (std::size_t i = 1; i < levels.size(); ++i)
    if (levels[i - 1] <= levels[i]) throw Error("levels must be strictly descending");

  ShiftPartition p;
  p.shift = shift;
  p.params = params;
  p.levels = levels;

  const int count = static_cast<int>(levels.size());
  const int gap_residue = (params.k - 1 - shift) % params.k;
  int interval = 0;
  bool open = false;  // inside a run of non-gap blocks
  for (int begin = 0, b = 0; begin < count; begin += params.l, ++b) {
    BasicBlock block;
    block.level_begin = begin;
    block.level_end = std::min(begin + params.l, count);
    block.gap = (b % params.k) == gap_residue;
    if (block.gap) {
      open = false;
    } else {
      if (!open) {
        ++interval;
        open = true;
      }
      block.interval = interval;
    }
    p.blocks.push_back(block);
  }
  p.interval_count = interval;
  return p;
}

}  // namespace bandmatch
