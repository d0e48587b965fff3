// Test-only oracles. These deliberately avoid the solver code paths: plain
// loops over candidate_disks with single-word masks, no dedup, no pruning.
#pragma once

#include "diskcover/coverage_set.hpp"
#include "diskcover/geometry.hpp"
#include "diskcover/harness/instance.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace diskcover::testing {

inline std::vector<Point> uniform_points(std::size_t n, double side, std::uint64_t seed, double offset = 0.0) {
  auto pts = harness::generate(n, side, seed).points;
  for (auto& p : pts) {
    p.x += offset;
    p.y += offset;
  }
  return pts;
}

inline std::size_t naive_count(const UnitDisk& d, const std::vector<Point>& pts) {
  std::size_t c = 0;
  for (const auto& p : pts) {
    const double dx = p.x - d.cx;
    const double dy = p.y - d.cy;
    if (dx * dx + dy * dy <= 1.0 + kCoverEps) {
      ++c;
    }
  }
  return c;
}

/// Max single-disk coverage over the candidate set.
inline std::size_t brute_best_one(const std::vector<Point>& pts) {
  std::size_t best = 0;
  for (const auto& d : candidate_disks(pts)) {
    best = std::max(best, naive_count(d, pts));
  }
  return best;
}

/// Max union coverage over all k-subsets (k <= 3) of the candidate set. n <= 64.
inline std::size_t brute_best_k(const std::vector<Point>& pts, std::size_t k) {
  if (pts.size() > 64 || k < 1 || k > 3) {
    throw std::invalid_argument("brute_best_k: n <= 64 and 1 <= k <= 3");
  }
  std::vector<std::uint64_t> masks;
  for (const auto& d : candidate_disks(pts)) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const double dx = pts[i].x - d.cx;
      const double dy = pts[i].y - d.cy;
      if (dx * dx + dy * dy <= 1.0 + kCoverEps) {
        m |= std::uint64_t{1} << i;
      }
    }
    masks.push_back(m);
  }
  const std::size_t c = masks.size();
  const std::size_t picks = std::min(k, c);
  int best = 0;
  if (picks == 1) {
    for (auto m : masks) best = std::max(best, std::popcount(m));
  } else if (picks == 2) {
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = a + 1; b < c; ++b) best = std::max(best, std::popcount(masks[a] | masks[b]));
  } else {
    for (std::size_t a = 0; a < c; ++a)
      for (std::size_t b = a + 1; b < c; ++b) {
        const std::uint64_t ab = masks[a] | masks[b];
        for (std::size_t e = b + 1; e < c; ++e) best = std::max(best, std::popcount(ab | masks[e]));
      }
  }
  return static_cast<std::size_t>(best);
}

/// Tight cluster of `size` points around (cx, cy), all within `spread`.
inline void add_cluster(std::vector<Point>& pts, double cx, double cy, std::size_t size, double spread = 0.02) {
  for (std::size_t j = 0; j < size; ++j) {
    const double t = static_cast<double>(j) / static_cast<double>(size);
    const double r = spread * (0.25 + 0.75 * t);
    pts.push_back(Point{cx + r * std::cos(6.283185307179586 * t), cy + r * std::sin(6.283185307179586 * t),
                        pts.size()});
  }
}

}  // namespace diskcover::testing
