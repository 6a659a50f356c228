#pragma once

#include <string>
#include <vector>

namespace seriesfair::checks {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail; // populated on failure
};

/// Recompute every published reference value the library is supposed to
/// reproduce (polynomial displays, critical points, extreme values,
/// crossovers, verdicts, multiplier tables) and report each comparison.
/// data_dir must contain extremes.csv and champions.csv.
std::vector<CheckResult> run_reference_checks(const std::string& data_dir);

} // namespace seriesfair::checks
