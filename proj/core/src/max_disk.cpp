#include "diskcover/max_disk.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace diskcover {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Placement {
  std::size_t depth = 0;
  UnitDisk disk;
};

bool better(const Placement& a, const Placement& b) {
  return a.depth > b.depth || (a.depth == b.depth && center_less(a.disk, b.disk));
}

struct ArcEvent {
  double angle;
  bool is_end;  // starts sort before ends at equal angle (closed arcs)

  bool operator<(const ArcEvent& o) const {
    return angle < o.angle || (angle == o.angle && !is_end && o.is_end);
  }
};

bool lex_point_less(const Point& a, const Point& b) {
  return a.x < b.x || (a.x == b.x && (a.y < b.y || (a.y == b.y && a.id < b.id)));
}

// Best placement among disks with pts[pivot] on the boundary (or centered on
// it when the pivot has no neighbor within distance 2).
Placement sweep_around(std::span<const Point> sorted, std::size_t pivot, std::vector<ArcEvent>& events) {
  const Point& p = sorted[pivot];
  events.clear();
  std::size_t base = 1;  // the pivot itself
  std::size_t wrapped = 0;

  auto visit = [&](const Point& q) {
    const double dx = q.x - p.x;
    const double dy = q.y - p.y;
    const double d2 = dx * dx + dy * dy;
    if (d2 == 0.0) {
      ++base;
      return;
    }
    const double d = std::sqrt(d2);
    if (d > 2.0 + kDiameterEps) {
      return;
    }
    const double half = std::acos(std::min(1.0, 0.5 * d));
    double start = std::atan2(dy, dx) - half;
    while (start < 0.0) {
      start += kTwoPi;
    }
    while (start >= kTwoPi) {
      start -= kTwoPi;
    }
    const double end = start + 2.0 * half;
    events.push_back({start, false});
    if (end >= kTwoPi) {
      ++wrapped;
      events.push_back({end - kTwoPi, true});
    } else {
      events.push_back({end, true});
    }
  };

  for (std::size_t j = pivot; j-- > 0;) {
    if (p.x - sorted[j].x > 2.0 + kDiameterEps) {
      break;
    }
    visit(sorted[j]);
  }
  for (std::size_t j = pivot + 1; j < sorted.size(); ++j) {
    if (sorted[j].x - p.x > 2.0 + kDiameterEps) {
      break;
    }
    visit(sorted[j]);
  }

  if (events.empty()) {
    return Placement{base, UnitDisk{p.x, p.y}};
  }

  std::sort(events.begin(), events.end());
  Placement best;
  bool have = false;
  std::size_t depth = base + wrapped;
  for (const ArcEvent& ev : events) {
    if (ev.is_end) {
      --depth;
      continue;
    }
    ++depth;
    if (have && depth < best.depth) {
      continue;
    }
    Placement cand{depth, UnitDisk{p.x + std::cos(ev.angle), p.y + std::sin(ev.angle)}};
    if (!have || better(cand, best)) {
      best = cand;
      have = true;
    }
  }
  return best;
}

Placement best_placement(std::span<const Point> pts) {
  std::vector<Point> sorted(pts.begin(), pts.end());
  std::sort(sorted.begin(), sorted.end(), lex_point_less);
  std::vector<ArcEvent> events;
  Placement best;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Placement cand = sweep_around(sorted, i, events);
    if (i == 0 || better(cand, best)) {
      best = cand;
    }
  }
  return best;
}

SingleDiskResult finish(const UnitDisk& disk, std::span<const Point> pts) {
  SingleDiskResult out{disk, coverage(disk, pts), 0};
  out.rho_witness = out.covered.count();
  return out;
}

bool on_lower_wall(double offset) {
  return offset == std::floor(offset);
}

}  // namespace

std::optional<CellIndex> containing_cell(std::size_t grid, double min_x, double min_y, double max_x,
                                         double max_y) {
  const auto& shift = GridSpec::kShifts.at(grid);
  const double fx = (min_x - shift.sx) / GridSpec::kCellSize;
  const double fy = (min_y - shift.sy) / GridSpec::kCellSize;
  const auto ix = static_cast<std::int64_t>(std::floor(fx));
  const auto iy = static_cast<std::int64_t>(std::floor(fy));
  const double hi_x = shift.sx + static_cast<double>(ix + 1) * GridSpec::kCellSize;
  const double hi_y = shift.sy + static_cast<double>(iy + 1) * GridSpec::kCellSize;
  if (max_x <= hi_x && max_y <= hi_y) {
    return CellIndex{ix, iy};
  }
  return std::nullopt;
}

SingleDiskResult best_disk_sweep(std::span<const Point> pts) {
  if (pts.empty()) {
    throw std::invalid_argument("best_disk_sweep: empty point set");
  }
  return finish(best_placement(pts).disk, pts);
}

SingleDiskResult best_disk_grid(std::span<const Point> pts, GridWork* work) {
  if (pts.empty()) {
    throw std::invalid_argument("best_disk_grid: empty point set");
  }
  double min_x = pts.front().x;
  double min_y = pts.front().y;
  for (const Point& p : pts) {
    min_x = std::min(min_x, p.x);
    min_y = std::min(min_y, p.y);
  }

  GridWork local;
  Placement best;
  bool have = false;
  for (const auto& shift : GridSpec::kShifts) {
    std::map<CellIndex, std::vector<Point>> cells;
    for (const Point& p : pts) {
      const double ox = (p.x - min_x - shift.sx) / GridSpec::kCellSize;
      const double oy = (p.y - min_y - shift.sy) / GridSpec::kCellSize;
      const auto ix = static_cast<std::int64_t>(std::floor(ox));
      const auto iy = static_cast<std::int64_t>(std::floor(oy));
      const bool wall_x = on_lower_wall(ox);
      const bool wall_y = on_lower_wall(oy);
      cells[{ix, iy}].push_back(p);
      if (wall_x) {
        cells[{ix - 1, iy}].push_back(p);
      }
      if (wall_y) {
        cells[{ix, iy - 1}].push_back(p);
      }
      if (wall_x && wall_y) {
        cells[{ix - 1, iy - 1}].push_back(p);
      }
    }
    for (const auto& [index, members] : cells) {
      ++local.nonempty_cells;
      local.point_slots += members.size();
      local.squared_work += members.size() * members.size();
      const Placement cand = best_placement(members);
      if (!have || better(cand, best)) {
        best = cand;
        have = true;
      }
    }
  }
  if (work != nullptr) {
    *work = local;
  }
  return finish(best.disk, pts);
}

}  // namespace diskcover
