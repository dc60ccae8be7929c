#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace coreblocks {

/// Torus character theta (n residues mod q-1) with a subset I of the
/// simple reflections on which theta is locally constant.
struct AdmissiblePair {
    int n = 0;
    long long q = 0;
    std::vector<int> theta;  // n entries in [0, q-2]
    std::vector<int> I;      // subset of {1..n-1}, ascending
};

bool is_prime_power(long long q);

/// All (theta, I) with I contained in {i : theta[i] = theta[i+1]}.
std::vector<AdmissiblePair> enumerate_admissible_pairs(int n, long long q);

/// Simple-module count (theta-first enumeration) and weight count
/// (subset-first enumeration); equal for GL_n.
std::pair<long long, long long> alperin_weight_count(int n, long long q);

/// Simple projective modules: constant theta with I full; q-1 of them.
long long steinberg_count(int n, long long q);

}  // namespace coreblocks
