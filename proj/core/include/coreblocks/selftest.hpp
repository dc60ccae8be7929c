#pragma once

#include <string>
#include <vector>

namespace coreblocks {

struct SelftestResult {
    std::string name;
    bool passed = false;
    std::string detail;  // empty on success
};

/// Per-module invariant suites, scaled by max_n. Heavy group-algebra
/// checks cap themselves lower than max_n.
std::vector<SelftestResult> run_selftest(int max_n);

}  // namespace coreblocks
