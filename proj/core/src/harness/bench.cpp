#include "diskcover/harness/bench.hpp"

#include "diskcover/exact_multi.hpp"
#include "diskcover/greedy_neighborhood.hpp"
#include "diskcover/harness/instance.hpp"
#include "diskcover/point_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>
#include <string_view>
#include <tuple>

namespace diskcover::harness {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::string describe(const BenchConfig& c, std::uint64_t seed) {
  return "n=" + std::to_string(c.n) + " side=" + format_double(c.side) + " seed=" + std::to_string(seed);
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto pos = text.find(sep);
    parts.push_back(text.substr(0, pos));
    if (pos == std::string_view::npos) {
      break;
    }
    text.remove_prefix(pos + 1);
  }
  return parts;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string_view::npos) {
    return {};
  }
  return s.substr(first, s.find_last_not_of(" \t") - first + 1);
}

template <typename T>
T parse_number(std::string_view token, const char* what) {
  token = trim(token);
  T v{};
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
    throw std::invalid_argument(std::string("invalid ") + what + " '" + std::string(token) + "'");
  }
  return v;
}

}  // namespace

BenchRecord bench_one(const BenchConfig& config, std::size_t m, std::uint64_t seed) {
  const Instance inst = generate(config.n, config.side, seed);

  BenchRecord rec;
  rec.n = config.n;
  rec.side = config.side;
  rec.seed = seed;

  auto start = Clock::now();
  const MultiDiskResult baseline = most_points(inst.points, m, ExactOptions{.dedup = false, .prune = false});
  rec.time_baseline_ms = elapsed_ms(start);

  start = Clock::now();
  const Solution ours = solve(inst.points, m);
  rec.time_ours_ms = elapsed_ms(start);

  rec.rho = ours.rho;
  rec.pairs_baseline = baseline.stats.combos_evaluated;
  rec.pairs_ours = ours.total_combos;
  rec.cover_baseline = baseline.covered.count();
  rec.cover_ours = ours.covered.count();
  if (rec.cover_baseline != rec.cover_ours) {
    throw BenchMismatch("coverage mismatch at " + describe(config, seed) + ": baseline " +
                        std::to_string(rec.cover_baseline) + " vs ours " + std::to_string(rec.cover_ours));
  }
  return rec;
}

std::vector<BenchRecord> run_bench(std::span<const BenchConfig> configs, std::size_t m,
                                   std::span<const std::uint64_t> seeds) {
  if (configs.empty() || seeds.empty()) {
    throw std::invalid_argument("bench: configs and seeds must be non-empty");
  }
  std::vector<BenchRecord> records;
  records.reserve(configs.size() * seeds.size());
  for (const BenchConfig& c : configs) {
    for (std::uint64_t seed : seeds) {
      records.push_back(bench_one(c, m, seed));
    }
  }
  std::stable_sort(records.begin(), records.end(), [](const BenchRecord& a, const BenchRecord& b) {
    return std::tie(a.n, a.side, a.seed) < std::tie(b.n, b.side, b.seed);
  });
  return records;
}

void write_csv(std::ostream& out, std::span<const BenchRecord> records, bool include_timing) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << r.n << ',' << format_double(r.side) << ',' << r.rho << ',' << r.pairs_baseline << ','
        << r.pairs_ours << ',' << r.cover_baseline << ',' << r.cover_ours << ',';
    if (include_timing) {
      out << format_double(r.time_baseline_ms) << ',' << format_double(r.time_ours_ms);
    } else {
      out << ',';
    }
    out << ',' << r.seed << '\n';
  }
}

std::string to_csv(std::span<const BenchRecord> records, bool include_timing) {
  std::ostringstream os;
  write_csv(os, records, include_timing);
  return os.str();
}

std::string to_json(std::span<const BenchRecord> records) {
  nlohmann::json rows = nlohmann::json::array();
  for (const BenchRecord& r : records) {
    rows.push_back({{"n", r.n},
                    {"side", r.side},
                    {"rho", r.rho},
                    {"pairs_baseline", r.pairs_baseline},
                    {"pairs_ours", r.pairs_ours},
                    {"cover_baseline", r.cover_baseline},
                    {"cover_ours", r.cover_ours},
                    {"time_baseline_ms", r.time_baseline_ms},
                    {"time_ours_ms", r.time_ours_ms},
                    {"seed", r.seed}});
  }
  return rows.dump(2);
}

std::vector<BenchConfig> parse_configs(const std::string& text) {
  std::vector<BenchConfig> configs;
  for (std::string_view item : split(text, ',')) {
    item = trim(item);
    if (item.empty()) {
      continue;
    }
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw std::invalid_argument("config '" + std::string(item) + "' is not n:side");
    }
    BenchConfig c{parse_number<std::size_t>(item.substr(0, colon), "n"),
                  parse_number<double>(item.substr(colon + 1), "side")};
    if (c.n == 0 || !(c.side > 0.0) || !std::isfinite(c.side)) {
      throw std::invalid_argument("config '" + std::string(item) + "' needs n >= 1 and side > 0");
    }
    configs.push_back(c);
  }
  if (configs.empty()) {
    throw std::invalid_argument("no bench configs given");
  }
  return configs;
}

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  for (std::string_view item : split(text, ',')) {
    if (trim(item).empty()) {
      continue;
    }
    seeds.push_back(parse_number<std::uint64_t>(item, "seed"));
  }
  if (seeds.empty()) {
    throw std::invalid_argument("no seeds given");
  }
  return seeds;
}

}  // namespace diskcover::harness
