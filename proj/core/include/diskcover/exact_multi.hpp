#pragma once

#include "diskcover/coverage_set.hpp"
#include "diskcover/geometry.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace diskcover {

struct ExactOptions {
  /// Collapse candidates with identical coverage sets before enumeration.
  bool dedup = false;
  /// Branch-and-bound over candidates sorted by coverage, descending.
  bool prune = false;
};

struct ExactSolveStats {
  std::size_t combos_evaluated = 0;  // k-subsets whose union was counted; pairs when k = 2
  std::size_t candidates_generated = 0;
  std::size_t candidates_after_dedup = 0;
};

struct MultiDiskResult {
  std::vector<UnitDisk> disks;  // exactly k, sorted by center
  CoverageSet covered;
  ExactSolveStats stats;
};

/// Best k disks by enumerating k-subsets of candidate_disks(pts) in
/// lexicographic index order. Ties: larger coverage first, then the
/// lexicographically smallest sorted center list. When there are fewer
/// candidates than k the solution is padded with the best disk.
/// k = 1 is answered by best_disk_sweep; combos_evaluated is then the number
/// of candidates that enumeration would have examined.
/// Throws std::invalid_argument on empty pts or k < 1.
[[nodiscard]] MultiDiskResult most_points(std::span<const Point> pts, std::size_t k,
                                          ExactOptions options = {});

/// most_points on the points whose ids are not in `excluded`. The covered set
/// stays in the caller's id space. With nothing left, returns k copies of the
/// disk centered on pts.front() and an empty covered set.
[[nodiscard]] MultiDiskResult most_points_excluding(std::span<const Point> pts, std::size_t k,
                                                    const CoverageSet& excluded,
                                                    ExactOptions options = {});

}  // namespace diskcover
