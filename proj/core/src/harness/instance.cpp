#include "diskcover/harness/instance.hpp"

#include "diskcover/harness/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace diskcover::harness {

Instance generate(std::size_t n, double side, std::uint64_t seed) {
  if (n == 0) {
    throw std::invalid_argument("generate: n must be positive");
  }
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("generate: side must be positive and finite");
  }
  Xoshiro256 rng(seed);
  Instance inst;
  inst.points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double x = side * rng.uniform01();
    const double y = side * rng.uniform01();
    inst.points.push_back(Point{x, y, i});
  }
  inst.meta = GeneratorMeta{InstanceKind::UniformSquare, n, side, seed, {}};
  return inst;
}

}  // namespace diskcover::harness
