#pragma once

#include "diskcover/coverage_set.hpp"
#include "diskcover/exact_multi.hpp"
#include "diskcover/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace diskcover {

/// Any unit disk sharing a point with a chosen disk lies within this distance
/// of the chosen disk's center (1 + 2).
struct NeighborhoodSpec {
  static constexpr double kRadius = 3.0;
};

struct IterationTrace {
  std::size_t i = 0;                  // number of disks after this iteration (2..m)
  std::size_t greedy_gain = 0;        // Cover(OPT_{i-1} + g_i) on the full instance
  std::size_t neighborhood_size = 0;  // |Neighbor(OPT_{i-1})|
  std::size_t exact_value = 0;        // Cover(O_i) on the full instance
  bool chose_greedy = false;
  std::size_t combos_evaluated = 0;   // i-subsets examined for O_i

  [[nodiscard]] std::size_t value() const { return chose_greedy ? greedy_gain : exact_value; }
};

struct Solution {
  std::vector<UnitDisk> disks;  // m disks
  CoverageSet covered;
  std::size_t rho = 0;          // single-disk optimum of the instance
  std::vector<IterationTrace> traces;
  std::size_t total_combos = 0; // sum of combos_evaluated over traces
};

/// Points within distance 3 of at least one disk center; ids preserved.
[[nodiscard]] std::vector<Point> neighbor_points(std::span<const Point> pts,
                                                 std::span<const UnitDisk> disks);

/// Exact best-m disks. Starts from the single-disk optimum and, for each
/// i = 2..m, keeps the better of
///   - the previous optimum plus the best disk on the still-uncovered points, and
///   - an exact i-disk search restricted to the points near the previous optimum.
/// Both branches are scored on the full instance; on equal scores the exact
/// branch wins. Throws std::invalid_argument when pts is empty or m < 1.
[[nodiscard]] Solution solve(std::span<const Point> pts, std::size_t m);

/// Plain greedy: repeatedly add the disk covering the most uncovered points.
/// Within (1 - 1/e) of optimal.
[[nodiscard]] Solution greedy_solve(std::span<const Point> pts, std::size_t m);

}  // namespace diskcover
