#include "diskcover/coverage_set.hpp"

#include <algorithm>
#include <bit>

namespace diskcover {

CoverageSet::CoverageSet(std::initializer_list<PointId> ids) {
  for (PointId id : ids) {
    insert(id);
  }
}

void CoverageSet::insert(PointId id) {
  const std::size_t w = id / 64;
  if (w >= words_.size()) {
    words_.resize(w + 1, 0);
  }
  const std::uint64_t mask = std::uint64_t{1} << (id % 64);
  if ((words_[w] & mask) == 0) {
    words_[w] |= mask;
    ++count_;
  }
}

bool CoverageSet::contains(PointId id) const noexcept {
  const std::size_t w = id / 64;
  return w < words_.size() && ((words_[w] >> (id % 64)) & 1U) != 0;
}

std::vector<PointId> CoverageSet::ids() const {
  std::vector<PointId> out;
  out.reserve(count_);
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t bits = words_[w];
    while (bits != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

CoverageSet& CoverageSet::operator|=(const CoverageSet& other) {
  if (other.words_.size() > words_.size()) {
    words_.resize(other.words_.size(), 0);
  }
  for (std::size_t w = 0; w < other.words_.size(); ++w) {
    words_[w] |= other.words_[w];
  }
  recount();
  return *this;
}

CoverageSet& CoverageSet::subtract(const CoverageSet& other) {
  const std::size_t n = std::min(words_.size(), other.words_.size());
  for (std::size_t w = 0; w < n; ++w) {
    words_[w] &= ~other.words_[w];
  }
  recount();
  return *this;
}

void CoverageSet::recount() noexcept {
  count_ = 0;
  for (std::uint64_t w : words_) {
    count_ += static_cast<std::size_t>(std::popcount(w));
  }
}

bool operator==(const CoverageSet& a, const CoverageSet& b) noexcept {
  if (a.count_ != b.count_) {
    return false;
  }
  const auto& longer = a.words_.size() >= b.words_.size() ? a.words_ : b.words_;
  const auto& shorter = a.words_.size() >= b.words_.size() ? b.words_ : a.words_;
  for (std::size_t w = 0; w < longer.size(); ++w) {
    const std::uint64_t s = w < shorter.size() ? shorter[w] : 0;
    if (longer[w] != s) {
      return false;
    }
  }
  return true;
}

CoverageSet coverage(const UnitDisk& d, std::span<const Point> pts) {
  CoverageSet out;
  for (const Point& p : pts) {
    if (covers(d, p)) {
      out.insert(p.id);
    }
  }
  return out;
}

CoverageSet coverage(std::span<const UnitDisk> disks, std::span<const Point> pts) {
  CoverageSet out;
  for (const Point& p : pts) {
    if (std::any_of(disks.begin(), disks.end(), [&](const UnitDisk& d) { return covers(d, p); })) {
      out.insert(p.id);
    }
  }
  return out;
}

CoverageSet union_cover(std::span<const CoverageSet> sets) {
  CoverageSet out;
  for (const CoverageSet& s : sets) {
    out |= s;
  }
  return out;
}

std::size_t exclusive_cover(std::span<const CoverageSet> d_sets, std::span<const CoverageSet> e_sets) {
  CoverageSet d = union_cover(d_sets);
  d.subtract(union_cover(e_sets));
  return d.count();
}

}  // namespace diskcover
