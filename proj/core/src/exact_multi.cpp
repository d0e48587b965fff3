#include "diskcover/exact_multi.hpp"

#include "diskcover/max_disk.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>

namespace diskcover {

namespace {

using Word = std::uint64_t;

// Candidate coverage bitsets over local indices 0..n-1, one row per candidate.
struct CandidateTable {
  std::vector<UnitDisk> disks;
  std::vector<Word> bits;
  std::vector<std::size_t> counts;
  std::size_t words = 0;

  [[nodiscard]] const Word* row(std::size_t i) const { return bits.data() + i * words; }
};

CandidateTable build_table(std::span<const Point> pts, std::vector<UnitDisk> disks) {
  CandidateTable t;
  t.words = (pts.size() + 63) / 64;
  t.bits.assign(disks.size() * t.words, 0);
  t.counts.assign(disks.size(), 0);
  for (std::size_t c = 0; c < disks.size(); ++c) {
    Word* row = t.bits.data() + c * t.words;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (covers(disks[c], pts[i])) {
        row[i / 64] |= Word{1} << (i % 64);
        ++t.counts[c];
      }
    }
  }
  t.disks = std::move(disks);
  return t;
}

// Keeps the first (smallest-center) candidate of each distinct coverage set.
CandidateTable dedup_table(const CandidateTable& in) {
  CandidateTable out;
  out.words = in.words;
  std::map<std::vector<Word>, std::size_t> seen;
  for (std::size_t c = 0; c < in.disks.size(); ++c) {
    std::vector<Word> key(in.row(c), in.row(c) + in.words);
    if (!seen.emplace(std::move(key), c).second) {
      continue;
    }
    out.disks.push_back(in.disks[c]);
    out.bits.insert(out.bits.end(), in.row(c), in.row(c) + in.words);
    out.counts.push_back(in.counts[c]);
  }
  return out;
}

class Enumerator {
public:
  Enumerator(const CandidateTable& table, std::size_t k, bool prune)
      : table_(table), k_(k), prune_(prune), order_(table.disks.size()),
        partial_((k + 1) * table.words, 0), chosen_(k) {
    std::iota(order_.begin(), order_.end(), std::size_t{0});
    if (prune_) {
      std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
        return table_.counts[a] > table_.counts[b];
      });
      // prefix_[j] = sum of the first j counts along `order_`.
      prefix_.assign(order_.size() + 1, 0);
      for (std::size_t j = 0; j < order_.size(); ++j) {
        prefix_[j + 1] = prefix_[j] + table_.counts[order_[j]];
      }
    }
  }

  void run() { descend(0, 0, 0); }

  [[nodiscard]] std::size_t combos() const { return combos_; }
  [[nodiscard]] std::size_t best_count() const { return best_count_; }
  [[nodiscard]] const std::vector<std::size_t>& best() const { return best_; }

private:
  [[nodiscard]] const Word* level(std::size_t depth) const { return partial_.data() + depth * table_.words; }
  [[nodiscard]] Word* level(std::size_t depth) { return partial_.data() + depth * table_.words; }

  void descend(std::size_t depth, std::size_t start, std::size_t current) {
    const std::size_t remaining = k_ - depth;
    const std::size_t n = order_.size();
    const Word* cur = level(depth);
    for (std::size_t j = start; j + remaining <= n; ++j) {
      if (prune_ && have_best_) {
        const std::size_t bound = current + (prefix_[j + remaining] - prefix_[j]);
        if (bound < best_count_) {
          break;  // counts are non-increasing along `order_`
        }
      }
      const std::size_t c = order_[j];
      const Word* row = table_.row(c);
      chosen_[depth] = c;
      if (remaining == 1) {
        std::size_t count = 0;
        for (std::size_t w = 0; w < table_.words; ++w) {
          count += static_cast<std::size_t>(std::popcount(cur[w] | row[w]));
        }
        ++combos_;
        consider(count);
        continue;
      }
      Word* next = level(depth + 1);
      std::size_t count = 0;
      for (std::size_t w = 0; w < table_.words; ++w) {
        next[w] = cur[w] | row[w];
        count += static_cast<std::size_t>(std::popcount(next[w]));
      }
      descend(depth + 1, j + 1, count);
    }
  }

  void consider(std::size_t count) {
    if (have_best_ && count < best_count_) {
      return;
    }
    std::vector<std::size_t> picked = chosen_;
    std::sort(picked.begin(), picked.end());  // table rows are in center order
    if (!have_best_ || count > best_count_ || picked < best_) {
      best_ = std::move(picked);
      best_count_ = count;
      have_best_ = true;
    }
  }

  const CandidateTable& table_;
  std::size_t k_;
  bool prune_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> prefix_;
  std::vector<Word> partial_;
  std::vector<std::size_t> chosen_;
  std::vector<std::size_t> best_;
  std::size_t best_count_ = 0;
  bool have_best_ = false;
  std::size_t combos_ = 0;
};

MultiDiskResult padded(std::vector<UnitDisk> disks, std::size_t k, std::span<const Point> pts,
                       ExactSolveStats stats) {
  const UnitDisk first = disks.front();
  while (disks.size() < k) {
    disks.push_back(first);
  }
  std::sort(disks.begin(), disks.end(), center_less);
  MultiDiskResult out;
  out.covered = coverage(disks, pts);
  out.disks = std::move(disks);
  out.stats = stats;
  return out;
}

}  // namespace

MultiDiskResult most_points(std::span<const Point> pts, std::size_t k, ExactOptions options) {
  if (pts.empty()) {
    throw std::invalid_argument("most_points: empty point set");
  }
  if (k < 1) {
    throw std::invalid_argument("most_points: k must be at least 1");
  }

  std::vector<UnitDisk> cands = candidate_disks(pts);
  ExactSolveStats stats;
  stats.candidates_generated = cands.size();

  if (k == 1 && !options.dedup) {
    stats.candidates_after_dedup = cands.size();
    stats.combos_evaluated = cands.size();
    return padded({best_disk_sweep(pts).disk}, 1, pts, stats);
  }

  CandidateTable table = build_table(pts, std::move(cands));
  if (options.dedup) {
    table = dedup_table(table);
  }
  stats.candidates_after_dedup = table.disks.size();

  if (k == 1) {
    stats.combos_evaluated = table.disks.size();
    return padded({best_disk_sweep(pts).disk}, 1, pts, stats);
  }

  const std::size_t kk = std::min(k, table.disks.size());
  Enumerator search(table, kk, options.prune);
  search.run();
  stats.combos_evaluated = search.combos();

  std::vector<UnitDisk> disks;
  for (std::size_t c : search.best()) {
    disks.push_back(table.disks[c]);
  }
  return padded(std::move(disks), k, pts, stats);
}

MultiDiskResult most_points_excluding(std::span<const Point> pts, std::size_t k,
                                      const CoverageSet& excluded, ExactOptions options) {
  if (pts.empty()) {
    throw std::invalid_argument("most_points_excluding: empty point set");
  }
  if (k < 1) {
    throw std::invalid_argument("most_points_excluding: k must be at least 1");
  }
  std::vector<Point> remaining;
  remaining.reserve(pts.size());
  for (const Point& p : pts) {
    if (!excluded.contains(p.id)) {
      remaining.push_back(p);
    }
  }
  if (remaining.empty()) {
    MultiDiskResult out;
    out.disks.assign(k, UnitDisk{pts.front().x, pts.front().y});
    return out;
  }
  return most_points(remaining, k, options);
}

}  // namespace diskcover
