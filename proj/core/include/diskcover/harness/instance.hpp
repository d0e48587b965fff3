#pragma once

#include "diskcover/geometry.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace diskcover::harness {

enum class InstanceKind { UniformSquare, File };

struct GeneratorMeta {
  InstanceKind kind = InstanceKind::UniformSquare;
  std::size_t n = 0;
  double side = 0.0;
  std::uint64_t seed = 0;
  std::string source;  // file path for InstanceKind::File
};

struct Instance {
  std::vector<Point> points;
  std::size_t m = 1;
  GeneratorMeta meta;
};

/// n i.i.d. points uniform in [0, side]^2 from Xoshiro256(seed).
/// Throws std::invalid_argument when n == 0 or side is not positive and finite.
[[nodiscard]] Instance generate(std::size_t n, double side, std::uint64_t seed);

}  // namespace diskcover::harness
