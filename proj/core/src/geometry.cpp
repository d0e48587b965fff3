#include "diskcover/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace diskcover {

namespace {

// Calls emit(center) for each through-pair disk of a and b.
template <typename Emit>
void through_pair_disks(const Point& a, const Point& b, Emit&& emit) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double d2 = dx * dx + dy * dy;
  if (d2 == 0.0) {
    return;
  }
  const double d = std::sqrt(d2);
  if (d > 2.0 + kDiameterEps) {
    return;
  }
  const double mx = 0.5 * (a.x + b.x);
  const double my = 0.5 * (a.y + b.y);
  if (std::abs(d - 2.0) <= kDiameterEps) {
    emit(UnitDisk{mx, my});
    return;
  }
  // Offset along the perpendicular bisector.
  const double h = std::sqrt(1.0 - 0.25 * d2);
  const double ux = -dy / d;
  const double uy = dx / d;
  emit(UnitDisk{mx + h * ux, my + h * uy});
  emit(UnitDisk{mx - h * ux, my - h * uy});
}

}  // namespace

bool center_list_less(std::span<const UnitDisk> a, std::span<const UnitDisk> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), center_less);
}

std::vector<UnitDisk> candidate_disks(std::span<const Point> pts) {
  std::vector<UnitDisk> out;
  out.reserve(pts.size());
  for (const Point& p : pts) {
    out.push_back(UnitDisk{p.x, p.y});
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      through_pair_disks(pts[i], pts[j], [&](const UnitDisk& d) { out.push_back(d); });
    }
  }
  std::sort(out.begin(), out.end(), center_less);
  auto same = [](const UnitDisk& a, const UnitDisk& b) {
    return std::abs(a.cx - b.cx) <= kCenterEps && std::abs(a.cy - b.cy) <= kCenterEps;
  };
  out.erase(std::unique(out.begin(), out.end(), same), out.end());
  return out;
}

std::size_t raw_candidate_count(std::span<const Point> pts) {
  std::size_t count = pts.size();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      through_pair_disks(pts[i], pts[j], [&](const UnitDisk&) { ++count; });
    }
  }
  return count;
}

void validate_instance_points(std::span<const Point> pts) {
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
      throw std::invalid_argument("point " + std::to_string(i) + " has a non-finite coordinate");
    }
    if (p.id != i) {
      throw std::invalid_argument("point at position " + std::to_string(i) + " has id " +
                                  std::to_string(p.id));
    }
  }
}

std::vector<Point> make_points(std::span<const std::pair<double, double>> xy) {
  std::vector<Point> out;
  out.reserve(xy.size());
  for (const auto& [x, y] : xy) {
    out.push_back(Point{x, y, out.size()});
  }
  return out;
}

}  // namespace diskcover
