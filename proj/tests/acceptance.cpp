// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "diskcover/coverage_set.hpp"
#include "diskcover/exact_multi.hpp"
#include "diskcover/greedy_neighborhood.hpp"
#include "diskcover/harness/bench.hpp"
#include "diskcover/harness/instance.hpp"
#include "diskcover/harness/rng.hpp"
#include "diskcover/max_disk.hpp"
#include "test_support.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace diskcover;
using harness::Xoshiro256;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct SolvedInstance {
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::size_t rho = 0;
  std::size_t opt = 0;
  std::size_t greedy = 0;
  std::vector<IterationTrace> traces;
};

std::vector<SolvedInstance> g_small;  // criterion 1 instances, reused by 3 and 7
std::vector<SolvedInstance> g_bench;  // criterion 4 instances, reused by 3
std::vector<harness::BenchRecord> g_records;

constexpr std::size_t kOracleInstances = 510;
constexpr std::size_t kSingleDiskInstances = 220;
constexpr std::size_t kSetPairs = 100000;
const std::vector<harness::BenchConfig> kTableConfigs = {{1000, 200.0}, {1000, 100.0}, {500, 100.0}};
const std::vector<std::uint64_t> kTableSeeds = {1, 2, 3, 4, 5};
constexpr double kSparseRatioFloor = 5.0;

Outcome oracle_optimality() {
  Xoshiro256 rng(20240601);
  std::size_t mismatches = 0;
  std::ostringstream first;
  std::size_t per_m[4] = {0, 0, 0, 0};
  for (std::size_t t = 0; t < kOracleInstances; ++t) {
    const std::size_t m = 1 + t % 3;
    const auto n = static_cast<std::size_t>(rng.uniform_int(2, 25));
    const double side = 1.0 + 7.0 * rng.uniform01();
    const std::uint64_t seed = rng.next();
    const auto pts = harness::generate(n, side, seed).points;

    const Solution sol = solve(pts, m);
    const std::size_t exact = most_points(pts, m, ExactOptions{.dedup = true}).covered.count();
    ++per_m[m];
    if (sol.covered.count() != exact && mismatches++ == 0) {
      first << " first mismatch: seed=" << seed << " n=" << n << " m=" << m << " side=" << side;
    }
    g_small.push_back({n, m, seed, sol.rho, exact, greedy_solve(pts, m).covered.count(), sol.traces});
  }
  std::ostringstream os;
  os << kOracleInstances << " instances (m=1:" << per_m[1] << " m=2:" << per_m[2] << " m=3:" << per_m[3]
     << "), " << mismatches << " mismatches" << first.str();
  return {mismatches == 0, os.str()};
}

Outcome single_disk_equivalence() {
  Xoshiro256 rng(777);
  std::size_t bad = 0;
  std::size_t brute_checked = 0;
  for (std::size_t t = 0; t < kSingleDiskInstances; ++t) {
    const auto n = static_cast<std::size_t>(t % 2 == 0 ? rng.uniform_int(1, 60) : rng.uniform_int(61, 500));
    const double side = 1.0 + 99.0 * rng.uniform01();
    const auto pts = harness::generate(n, side, rng.next()).points;
    const std::size_t grid = best_disk_grid(pts).rho_witness;
    const std::size_t sweep = best_disk_sweep(pts).rho_witness;
    bool ok = grid == sweep;
    if (n <= 60) {
      ++brute_checked;
      ok = ok && sweep == testing::brute_best_one(pts);
    }
    bad += ok ? 0 : 1;
  }
  std::ostringstream os;
  os << kSingleDiskInstances << " instances (" << brute_checked << " also brute-forced), " << bad << " mismatches";
  return {bad == 0, os.str()};
}

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t h = v.size() / 2;
  return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

Outcome table_direction() {
  try {
    g_records = harness::run_bench(kTableConfigs, 2, kTableSeeds);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  for (const auto& r : g_records) {
    const auto pts = harness::generate(r.n, r.side, r.seed).points;
    const Solution sol = solve(pts, 2);
    g_bench.push_back({r.n, 2, r.seed, sol.rho, r.cover_baseline, 0, sol.traces});
  }
  bool pass = true;
  std::ostringstream os;
  for (const auto& c : kTableConfigs) {
    std::vector<double> base;
    std::vector<double> ours;
    std::vector<double> rho;
    for (const auto& r : g_records) {
      if (r.n == c.n && r.side == c.side) {
        base.push_back(static_cast<double>(r.pairs_baseline));
        ours.push_back(static_cast<double>(r.pairs_ours));
        rho.push_back(static_cast<double>(r.rho));
      }
    }
    const double mb = median(base);
    const double mo = median(ours);
    const double ratio = mb / std::max(1.0, mo);
    bool ok = mo < mb;
    if (c.side == 200.0) {
      ok = ok && ratio > kSparseRatioFloor;
    }
    pass = pass && ok;
    os << "\n      n=" << c.n << " side=" << c.side << ": median rho=" << median(rho) << " pairs_baseline=" << mb
       << " pairs_ours=" << mo << " ratio=" << ratio << (ok ? "" : "  <-- FAIL");
  }
  return {pass, os.str()};
}

Outcome packing_bound() {
  std::size_t iterations = 0;
  std::size_t violations = 0;
  auto scan = [&](const std::vector<SolvedInstance>& set) {
    for (const auto& s : set) {
      for (const auto& t : s.traces) {
        ++iterations;
        violations += t.neighborhood_size > 21 * s.rho * (t.i - 1) ? 1 : 0;
      }
    }
  };
  scan(g_small);
  scan(g_bench);
  std::ostringstream os;
  os << iterations << " iterations checked, " << violations << " violations";
  return {violations == 0 && iterations > 0, os.str()};
}

Outcome bench_coverage_equality() {
  std::size_t bad = 0;
  for (const auto& r : g_records) {
    bad += r.cover_baseline == r.cover_ours ? 0 : 1;
  }
  std::ostringstream os;
  os << g_records.size() << " records, " << bad << " with cover_baseline != cover_ours";
  return {bad == 0 && !g_records.empty(), os.str()};
}

CoverageSet random_set(Xoshiro256& rng, std::size_t universe) {
  CoverageSet s;
  const double density = rng.uniform01();
  for (std::size_t i = 0; i < universe; ++i) {
    if (rng.uniform01() < density) {
      s.insert(i);
    }
  }
  return s;
}

Outcome set_identities() {
  Xoshiro256 rng(6);
  std::size_t bad = 0;
  for (std::size_t t = 0; t < kSetPairs; ++t) {
    const std::size_t universe = 1 + rng.uniform_int(0, 127);
    const std::vector<CoverageSet> d = {random_set(rng, universe)};
    const std::vector<CoverageSet> e = {random_set(rng, universe)};
    const std::vector<CoverageSet> both = {d[0], e[0]};
    const std::size_t cover_d = union_cover(d).count();
    const bool ok = exclusive_cover(d, e) <= cover_d &&
                    union_cover(both).count() == cover_d + exclusive_cover(e, d);
    bad += ok ? 0 : 1;
  }
  std::ostringstream os;
  os << kSetPairs << " random pairs, " << bad << " violations";
  return {bad == 0, os.str()};
}

Outcome greedy_bound() {
  const double factor = 1.0 - std::exp(-1.0);
  std::size_t bad = 0;
  std::size_t strictly_worse = 0;
  for (const auto& s : g_small) {
    bad += static_cast<double>(s.greedy) >= factor * static_cast<double>(s.opt) - 1e-9 ? 0 : 1;
    strictly_worse += s.greedy < s.opt ? 1 : 0;
  }
  std::ostringstream os;
  os << g_small.size() << " instances, " << bad << " violations (greedy strictly suboptimal on " << strictly_worse
     << ")";
  return {bad == 0 && !g_small.empty(), os.str()};
}

Outcome determinism() {
  const std::string first = harness::to_csv(g_records, false);
  std::vector<harness::BenchRecord> again;
  try {
    again = harness::run_bench(kTableConfigs, 2, kTableSeeds);
  } catch (const std::exception& e) {
    return {false, e.what()};
  }
  const bool same = first == harness::to_csv(again, false);
  return {same, same ? "repeated bench CSV identical (timing columns blanked)" : "CSV differs between runs"};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"AC1 oracle optimality (solve == exhaustive, n in [2,25], m in {1,2,3})", oracle_optimality},
      {"AC2 single-disk equivalence (grid == sweep == brute force)", single_disk_equivalence},
      {"AC4 pair-count direction (median ours < baseline; ratio > 5 at side 200)", table_direction},
      {"AC3 neighborhood bound (size <= 21 * rho * (i - 1))", packing_bound},
      {"AC5 bench coverage equality", bench_coverage_equality},
      {"AC6 Cover/ExclusiveCover identities", set_identities},
      {"AC7 greedy >= (1 - 1/e) * OPT", greedy_bound},
      {"AC8 bench determinism", determinism},
  };

  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    const Outcome o = c.run();
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s  (%.2fs)\n      %s\n", o.pass ? "PASS" : "FAIL", c.name, secs, o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
