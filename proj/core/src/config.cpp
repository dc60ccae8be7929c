#include "coreblocks/config.hpp"

#include <cstdlib>

namespace coreblocks::config {

namespace {
int group_bound = 7;
}

int enumeration_bound() {
    if (const char* env = std::getenv("COREBLOCKS_MAX_N")) {
        int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 60;
}

int chartable_bound() { return 20; }

int group_expansion_bound() { return group_bound; }
void set_group_expansion_bound(int n) { group_bound = n; }

}  // namespace coreblocks::config
