#pragma once

#include "diskcover/geometry.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace diskcover {

/// Set of point ids with dense bitset storage. The word vector grows on
/// insert; trailing zero words do not affect equality.
class CoverageSet {
public:
  CoverageSet() = default;
  explicit CoverageSet(std::size_t universe) : words_((universe + 63) / 64, 0) {}
  CoverageSet(std::initializer_list<PointId> ids);

  void insert(PointId id);
  [[nodiscard]] bool contains(PointId id) const noexcept;
  [[nodiscard]] std::size_t count() const noexcept { return count_; }
  [[nodiscard]] bool empty() const noexcept { return count_ == 0; }

  [[nodiscard]] std::vector<PointId> ids() const;
  [[nodiscard]] std::span<const std::uint64_t> words() const noexcept { return words_; }

  CoverageSet& operator|=(const CoverageSet& other);
  CoverageSet& subtract(const CoverageSet& other);

  friend bool operator==(const CoverageSet& a, const CoverageSet& b) noexcept;

private:
  void recount() noexcept;

  std::vector<std::uint64_t> words_;
  std::size_t count_ = 0;
};

/// Points(d): ids of pts covered by d.
[[nodiscard]] CoverageSet coverage(const UnitDisk& d, std::span<const Point> pts);

/// Points(D) for a disk set.
[[nodiscard]] CoverageSet coverage(std::span<const UnitDisk> disks, std::span<const Point> pts);

[[nodiscard]] CoverageSet union_cover(std::span<const CoverageSet> sets);

/// |(U d_sets) \ (U e_sets)|
[[nodiscard]] std::size_t exclusive_cover(std::span<const CoverageSet> d_sets,
                                          std::span<const CoverageSet> e_sets);

}  // namespace diskcover
