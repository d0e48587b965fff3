#pragma once

#include "diskcover/coverage_set.hpp"
#include "diskcover/geometry.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>

namespace diskcover {

/// Four 4x4 grids, offset from each other by 2 units along each axis. Every
/// unit disk lies inside a single closed cell of at least one of them.
struct GridSpec {
  static constexpr double kCellSize = 4.0;
  static constexpr double kShiftStep = 2.0;

  struct Shift {
    double sx;
    double sy;
  };
  static constexpr std::array<Shift, 4> kShifts{{{0.0, 0.0}, {kShiftStep, 0.0}, {0.0, kShiftStep},
                                                 {kShiftStep, kShiftStep}}};
};

struct CellIndex {
  std::int64_t ix = 0;
  std::int64_t iy = 0;

  friend bool operator==(const CellIndex&, const CellIndex&) = default;
  friend auto operator<=>(const CellIndex&, const CellIndex&) = default;
};

/// The closed cell of grid `grid` (0..3) that contains the axis-aligned box,
/// if the box fits in one cell. Coordinates are relative to the grid anchor.
[[nodiscard]] std::optional<CellIndex> containing_cell(std::size_t grid, double min_x, double min_y,
                                                       double max_x, double max_y);

struct SingleDiskResult {
  UnitDisk disk;
  CoverageSet covered;
  std::size_t rho_witness = 0;
};

/// Instrumentation for best_disk_grid.
struct GridWork {
  std::size_t nonempty_cells = 0;
  std::size_t point_slots = 0;       // sum of cell sizes over all grids
  std::size_t squared_work = 0;      // sum of squared cell sizes
};

/// Exact single-disk optimum by angular sweep around every point: each
/// neighbor within distance 2 contributes a closed arc of admissible centers on
/// the unit circle about the pivot; the deepest arc overlap wins. Ties go to
/// the lexicographically smallest center. Throws std::invalid_argument on
/// empty input.
[[nodiscard]] SingleDiskResult best_disk_sweep(std::span<const Point> pts);

/// Same optimum as best_disk_sweep, computed per cell of the four shifted
/// grids. Points on a cell wall belong to every cell they touch.
[[nodiscard]] SingleDiskResult best_disk_grid(std::span<const Point> pts, GridWork* work = nullptr);

}  // namespace diskcover
