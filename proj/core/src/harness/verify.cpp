#include "diskcover/harness/verify.hpp"

#include "diskcover/exact_multi.hpp"
#include "diskcover/greedy_neighborhood.hpp"
#include "diskcover/harness/instance.hpp"
#include "diskcover/harness/rng.hpp"
#include "diskcover/point_io.hpp"

#include <chrono>
#include <stdexcept>

namespace diskcover::harness {

namespace {

std::vector<CoverageSet> per_disk(std::span<const UnitDisk> disks, std::span<const Point> pts) {
  std::vector<CoverageSet> out;
  out.reserve(disks.size());
  for (const UnitDisk& d : disks) {
    out.push_back(coverage(d, pts));
  }
  return out;
}

// Returns an empty string when all checks hold, else a description.
std::string check_trial(std::span<const Point> pts, std::size_t m) {
  const Solution sol = solve(pts, m);
  const MultiDiskResult exact = most_points(pts, m, ExactOptions{.dedup = true, .prune = false});

  if (sol.covered.count() != exact.covered.count()) {
    return "solve covers " + std::to_string(sol.covered.count()) + ", exhaustive covers " +
           std::to_string(exact.covered.count());
  }
  if (!(sol.covered == coverage(sol.disks, pts))) {
    return "solution coverage does not recompute from its disks";
  }
  for (const IterationTrace& t : sol.traces) {
    if (t.neighborhood_size > 21 * sol.rho * (t.i - 1)) {
      return "neighborhood bound violated at i=" + std::to_string(t.i);
    }
  }

  const auto d_sets = per_disk(sol.disks, pts);
  const auto e_sets = per_disk(exact.disks, pts);
  std::vector<CoverageSet> both = d_sets;
  both.insert(both.end(), e_sets.begin(), e_sets.end());
  const std::size_t cover_d = union_cover(d_sets).count();
  const std::size_t cover_e = union_cover(e_sets).count();
  const std::size_t cover_de = union_cover(both).count();
  if (exclusive_cover(d_sets, e_sets) > cover_d) {
    return "ExclusiveCover(D,E) > Cover(D)";
  }
  if (cover_de != cover_d + exclusive_cover(e_sets, d_sets)) {
    return "Cover(D u E) != Cover(D) + ExclusiveCover(E,D)";
  }
  if (cover_de > cover_d + cover_e) {
    return "Cover(D u E) > Cover(D) + Cover(E)";
  }
  return {};
}

}  // namespace

TrialSpec trial_spec(const VerifyOptions& options, std::size_t trial) {
  SplitMix64 mix(options.seed ^ (0xA0761D6478BD642FULL * (trial + 1)));
  Xoshiro256 rng(mix.next());
  TrialSpec spec;
  spec.seed = rng.next();
  spec.n = static_cast<std::size_t>(rng.uniform_int(1, options.n_max));
  spec.m = static_cast<std::size_t>(rng.uniform_int(1, options.m_max));
  spec.side = 1.0 + 7.0 * rng.uniform01();
  return spec;
}

VerifyReport verify(const VerifyOptions& options) {
  if (options.trials == 0 || options.n_max == 0 || options.m_max == 0) {
    throw std::invalid_argument("verify: trials, n_max and m_max must be positive");
  }
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  VerifyReport report;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    if (options.time_budget_s > 0.0 &&
        std::chrono::duration<double>(Clock::now() - start).count() > options.time_budget_s) {
      report.skipped = options.trials - trial;
      break;
    }
    const TrialSpec spec = trial_spec(options, trial);
    const Instance inst = generate(spec.n, spec.side, spec.seed);
    std::string problem;
    try {
      problem = check_trial(inst.points, spec.m);
    } catch (const std::exception& e) {
      problem = std::string("exception: ") + e.what();
    }
    if (problem.empty()) {
      ++report.passed;
    } else {
      ++report.failed;
      report.failures.push_back("trial=" + std::to_string(trial) + " seed=" + std::to_string(spec.seed) +
                                " n=" + std::to_string(spec.n) + " m=" + std::to_string(spec.m) +
                                " side=" + format_double(spec.side) + ": " + problem);
    }
  }
  return report;
}

}  // namespace diskcover::harness
