#include "diskcover/greedy_neighborhood.hpp"

#include "diskcover/max_disk.hpp"

#include <algorithm>
#include <stdexcept>

namespace diskcover {

namespace {

constexpr double kNeighborLimit = NeighborhoodSpec::kRadius * NeighborhoodSpec::kRadius * (1.0 + kCoverEps);

void check_inputs(std::span<const Point> pts, std::size_t m) {
  if (pts.empty()) {
    throw std::invalid_argument("solve: empty point set");
  }
  if (m < 1) {
    throw std::invalid_argument("solve: m must be at least 1");
  }
}

// g_i: best single disk on the points not covered by `current`.
UnitDisk greedy_disk(std::span<const Point> pts, const CoverageSet& current) {
  return most_points_excluding(pts, 1, current).disks.front();
}

}  // namespace

std::vector<Point> neighbor_points(std::span<const Point> pts, std::span<const UnitDisk> disks) {
  std::vector<Point> out;
  for (const Point& p : pts) {
    const bool near = std::any_of(disks.begin(), disks.end(), [&](const UnitDisk& d) {
      return squared_distance(p.x, p.y, d.cx, d.cy) <= kNeighborLimit;
    });
    if (near) {
      out.push_back(p);
    }
  }
  return out;
}

Solution solve(std::span<const Point> pts, std::size_t m) {
  check_inputs(pts, m);

  Solution sol;
  const SingleDiskResult first = best_disk_grid(pts);
  sol.disks = {first.disk};
  sol.covered = first.covered;
  sol.rho = first.rho_witness;

  for (std::size_t i = 2; i <= m; ++i) {
    IterationTrace trace;
    trace.i = i;

    std::vector<UnitDisk> extended = sol.disks;
    extended.push_back(greedy_disk(pts, sol.covered));
    CoverageSet extended_cover = coverage(extended, pts);
    trace.greedy_gain = extended_cover.count();

    const std::vector<Point> near = neighbor_points(pts, sol.disks);
    trace.neighborhood_size = near.size();
    const MultiDiskResult local = most_points(near, i, ExactOptions{.dedup = true, .prune = false});
    CoverageSet local_cover = coverage(local.disks, pts);
    trace.exact_value = local_cover.count();
    trace.combos_evaluated = local.stats.combos_evaluated;

    trace.chose_greedy = trace.greedy_gain > trace.exact_value;
    if (trace.chose_greedy) {
      sol.disks = std::move(extended);
      sol.covered = std::move(extended_cover);
    } else {
      sol.disks = local.disks;
      sol.covered = std::move(local_cover);
    }
    sol.total_combos += trace.combos_evaluated;
    sol.traces.push_back(trace);
  }
  return sol;
}

Solution greedy_solve(std::span<const Point> pts, std::size_t m) {
  check_inputs(pts, m);

  Solution sol;
  const SingleDiskResult first = best_disk_grid(pts);
  sol.disks = {first.disk};
  sol.covered = first.covered;
  sol.rho = first.rho_witness;
  for (std::size_t i = 2; i <= m; ++i) {
    sol.disks.push_back(greedy_disk(pts, sol.covered));
    sol.covered = coverage(sol.disks, pts);
  }
  return sol;
}

}  // namespace diskcover
