#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace diskcover {

/// Slack on squared distance for closed unit-disk membership. Through-pair
/// candidate disks put points exactly on the boundary.
inline constexpr double kCoverEps = 1e-9;

/// Two candidate centers closer than this (per coordinate) are the same disk.
inline constexpr double kCenterEps = 1e-12;

/// Pairs whose distance is within this of 2 get a single midpoint disk.
inline constexpr double kDiameterEps = 1e-12;

using PointId = std::size_t;

struct Point {
  double x = 0.0;
  double y = 0.0;
  PointId id = 0;
};

/// Closed disk of radius 1.
struct UnitDisk {
  double cx = 0.0;
  double cy = 0.0;

  friend bool operator==(const UnitDisk&, const UnitDisk&) = default;
  friend auto operator<=>(const UnitDisk&, const UnitDisk&) = default;
};

[[nodiscard]] inline double squared_distance(double ax, double ay, double bx, double by) noexcept {
  const double dx = ax - bx;
  const double dy = ay - by;
  return dx * dx + dy * dy;
}

[[nodiscard]] inline bool covers(const UnitDisk& d, const Point& p) noexcept {
  return squared_distance(p.x, p.y, d.cx, d.cy) <= 1.0 + kCoverEps;
}

/// Lexicographic (cx, cy) order used for every tie-break.
[[nodiscard]] inline bool center_less(const UnitDisk& a, const UnitDisk& b) noexcept {
  return a.cx < b.cx || (a.cx == b.cx && a.cy < b.cy);
}

/// Lexicographic comparison of two center lists, each sorted by center_less first.
[[nodiscard]] bool center_list_less(std::span<const UnitDisk> a, std::span<const UnitDisk> b);

/// The classical candidate set: one disk centered on every point, plus the
/// (one or two) unit disks whose boundary passes through each pair of points
/// at distance in (0, 2]. Sorted by center, coincident centers merged.
/// Some optimal k-disk solution always uses only these disks.
[[nodiscard]] std::vector<UnitDisk> candidate_disks(std::span<const Point> pts);

/// Number of candidates before center deduplication.
[[nodiscard]] std::size_t raw_candidate_count(std::span<const Point> pts);

/// Throws std::invalid_argument on NaN/infinite coordinates or ids that do not
/// match input order.
void validate_instance_points(std::span<const Point> pts);

/// Builds points with ids 0..n-1 from coordinate pairs.
[[nodiscard]] std::vector<Point> make_points(std::span<const std::pair<double, double>> xy);

}  // namespace diskcover
