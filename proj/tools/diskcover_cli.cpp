// diskcover: solve, benchmark and verify the m-unit-disk maximum coverage solvers.
//
//   diskcover solve  --input FILE --m INT [--json]
//   diskcover bench  --config "n:side,..." --m INT --seeds "s1,s2,..." --out CSV [--json-out PATH]
//   diskcover verify --trials INT --n-max INT --m-max INT --seed INT [--time-budget SECONDS]
//   diskcover gen    --n INT --side REAL --seed INT --out FILE
//
// Exit codes: 0 success, 1 usage or parse error, 2 verification failure.

#include "diskcover/greedy_neighborhood.hpp"
#include "diskcover/harness/bench.hpp"
#include "diskcover/harness/instance.hpp"
#include "diskcover/harness/report.hpp"
#include "diskcover/harness/verify.hpp"
#include "diskcover/point_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitVerify = 2;

int run_solve(const std::string& input, std::size_t m, bool json) {
  const std::vector<diskcover::Point> pts = diskcover::read_point_file(input);
  if (pts.empty()) {
    std::cerr << "error: " << input << " contains no points\n";
    return kExitUsage;
  }
  const diskcover::Solution sol = diskcover::solve(pts, m);
  if (json) {
    std::cout << diskcover::harness::solution_json(sol) << '\n';
  } else {
    std::cout << diskcover::harness::solution_text(sol);
  }
  return 0;
}

int run_bench(const std::string& config, std::size_t m, const std::string& seeds, const std::string& out,
              const std::string& json_out) {
  namespace h = diskcover::harness;
  const auto configs = h::parse_configs(config);
  const auto seed_list = h::parse_seeds(seeds);
  if (m >= 3) {
    std::cerr << "warning: the baseline enumerates all " << m
              << "-subsets of the candidate disks; this can take a very long time\n";
  }
  std::vector<h::BenchRecord> records;
  try {
    records = h::run_bench(configs, m, seed_list);
  } catch (const h::BenchMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitVerify;
  }
  std::ofstream csv(out);
  if (!csv) {
    std::cerr << "error: cannot write " << out << '\n';
    return kExitUsage;
  }
  h::write_csv(csv, records);
  if (!json_out.empty()) {
    std::ofstream js(json_out);
    if (!js) {
      std::cerr << "error: cannot write " << json_out << '\n';
      return kExitUsage;
    }
    js << h::to_json(records) << '\n';
  }
  for (const auto& r : records) {
    std::cout << "n=" << r.n << " side=" << diskcover::format_double(r.side) << " seed=" << r.seed
              << " rho=" << r.rho << " pairs_baseline=" << r.pairs_baseline << " pairs_ours=" << r.pairs_ours
              << " cover=" << r.cover_ours << '\n';
  }
  return 0;
}

int run_verify(const diskcover::harness::VerifyOptions& options) {
  const auto report = diskcover::harness::verify(options);
  for (const auto& line : report.failures) {
    std::cerr << "FAIL " << line << '\n';
  }
  std::cout << "verify: " << report.passed << " passed, " << report.failed << " failed, " << report.skipped
            << " skipped\n";
  return report.ok() ? 0 : kExitVerify;
}

int run_gen(std::size_t n, double side, std::uint64_t seed, const std::string& out) {
  const auto inst = diskcover::harness::generate(n, side, seed);
  diskcover::write_point_file(out, inst.points);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact placement of m unit disks covering the most points"};
  app.require_subcommand(1);

  std::string input;
  std::size_t solve_m = 1;
  bool json = false;
  auto* solve = app.add_subcommand("solve", "Solve an instance read from a point file");
  solve->add_option("--input", input, "Point file (\"x y\" or \"x,y\" per line)")->required();
  solve->add_option("--m", solve_m, "Number of disks")->required()->check(CLI::PositiveNumber);
  solve->add_flag("--json", json, "Print the solution as JSON");

  std::string config;
  std::size_t bench_m = 2;
  std::string seeds;
  std::string out;
  std::string json_out;
  auto* bench = app.add_subcommand("bench", "Compare pair counts against exhaustive enumeration");
  bench->add_option("--config", config, "Comma-separated n:side pairs")->required();
  bench->add_option("--m", bench_m, "Number of disks")->capture_default_str()->check(CLI::PositiveNumber);
  bench->add_option("--seeds", seeds, "Comma-separated seeds")->required();
  bench->add_option("--out", out, "CSV output path")->required();
  bench->add_option("--json-out", json_out, "Optional JSON output path");

  diskcover::harness::VerifyOptions vopt;
  auto* verify = app.add_subcommand("verify", "Cross-check against exhaustive enumeration on random instances");
  verify->add_option("--trials", vopt.trials)->required()->check(CLI::PositiveNumber);
  verify->add_option("--n-max", vopt.n_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("--m-max", vopt.m_max)->required()->check(CLI::PositiveNumber);
  verify->add_option("--seed", vopt.seed)->required();
  verify->add_option("--time-budget", vopt.time_budget_s, "Seconds; remaining trials are skipped after it");

  std::size_t gen_n = 0;
  double gen_side = 0.0;
  std::uint64_t gen_seed = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Write a uniform random instance");
  gen->add_option("--n", gen_n)->required()->check(CLI::PositiveNumber);
  gen->add_option("--side", gen_side)->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", gen_seed)->required();
  gen->add_option("--out", gen_out)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (solve->parsed()) {
      return run_solve(input, solve_m, json);
    }
    if (bench->parsed()) {
      return run_bench(config, bench_m, seeds, out, json_out);
    }
    if (verify->parsed()) {
      return run_verify(vopt);
    }
    if (gen->parsed()) {
      return run_gen(gen_n, gen_side, gen_seed, gen_out);
    }
  } catch (const diskcover::ParseError& e) {
    std::cerr << "error: " << input << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
