#pragma once

#include "diskcover/greedy_neighborhood.hpp"

#include <string>

namespace diskcover::harness {

/// {"disks":[{"cx","cy"}], "covered", "rho", "traces":[...], "total_combos"}
[[nodiscard]] std::string solution_json(const Solution& sol);

/// Short human-readable summary.
[[nodiscard]] std::string solution_text(const Solution& sol);

}  // namespace diskcover::harness
