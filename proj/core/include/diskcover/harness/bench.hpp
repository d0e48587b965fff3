#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskcover::harness {

struct BenchConfig {
  std::size_t n = 0;
  double side = 0.0;
};

/// One row of the pair-count comparison. Baseline is full candidate
/// enumeration (no dedup, no pruning); "ours" is the neighborhood solver.
struct BenchRecord {
  std::size_t n = 0;
  double side = 0.0;
  std::size_t rho = 0;
  std::size_t pairs_baseline = 0;
  std::size_t pairs_ours = 0;
  std::size_t cover_baseline = 0;
  std::size_t cover_ours = 0;
  double time_baseline_ms = 0.0;
  double time_ours_ms = 0.0;
  std::uint64_t seed = 0;
};

/// Thrown when the two exact solvers disagree on a record.
class BenchMismatch : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Runs every config x seed. Rows come back sorted by (n, side, seed).
[[nodiscard]] std::vector<BenchRecord> run_bench(std::span<const BenchConfig> configs, std::size_t m,
                                                 std::span<const std::uint64_t> seeds);

[[nodiscard]] BenchRecord bench_one(const BenchConfig& config, std::size_t m, std::uint64_t seed);

inline constexpr const char* kCsvHeader =
    "n,side,rho,pairs_baseline,pairs_ours,cover_baseline,cover_ours,time_baseline_ms,time_ours_ms,seed";

/// CSV with header. Timing columns are written as empty fields when
/// include_timing is false so the layout stays fixed.
void write_csv(std::ostream& out, std::span<const BenchRecord> records, bool include_timing = true);
[[nodiscard]] std::string to_csv(std::span<const BenchRecord> records, bool include_timing = true);
[[nodiscard]] std::string to_json(std::span<const BenchRecord> records);

/// "1000:200,500:100" -> configs. Throws std::invalid_argument on bad syntax.
[[nodiscard]] std::vector<BenchConfig> parse_configs(const std::string& text);
/// "1,2,3" -> seeds.
[[nodiscard]] std::vector<std::uint64_t> parse_seeds(const std::string& text);

}  // namespace diskcover::harness
