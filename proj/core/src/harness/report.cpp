#include "diskcover/harness/report.hpp"

#include "diskcover/point_io.hpp"

#include <json.hpp>

#include <sstream>

namespace diskcover::harness {

std::string solution_json(const Solution& sol) {
  nlohmann::json disks = nlohmann::json::array();
  for (const UnitDisk& d : sol.disks) {
    disks.push_back({{"cx", d.cx}, {"cy", d.cy}});
  }
  nlohmann::json traces = nlohmann::json::array();
  for (const IterationTrace& t : sol.traces) {
    traces.push_back({{"i", t.i},
                      {"greedy_gain", t.greedy_gain},
                      {"neighborhood_size", t.neighborhood_size},
                      {"exact_value", t.exact_value},
                      {"chose_greedy", t.chose_greedy},
                      {"combos_evaluated", t.combos_evaluated}});
  }
  const nlohmann::json out = {{"disks", disks},
                              {"covered", sol.covered.count()},
                              {"rho", sol.rho},
                              {"traces", traces},
                              {"total_combos", sol.total_combos}};
  return out.dump(2);
}

std::string solution_text(const Solution& sol) {
  std::ostringstream os;
  os << "covered " << sol.covered.count() << " points with " << sol.disks.size() << " disk(s), rho "
     << sol.rho << '\n';
  for (const UnitDisk& d : sol.disks) {
    os << "  disk " << format_double(d.cx) << ' ' << format_double(d.cy) << '\n';
  }
  for (const IterationTrace& t : sol.traces) {
    os << "  i=" << t.i << " greedy=" << t.greedy_gain << " exact=" << t.exact_value
       << " neighborhood=" << t.neighborhood_size << " combos=" << t.combos_evaluated
       << (t.chose_greedy ? " [greedy]" : " [exact]") << '\n';
  }
  return os.str();
}

}  // namespace diskcover::harness
