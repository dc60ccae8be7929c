#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "coreblocks/partition.hpp"

namespace coreblocks {

/// Permutation of {0,...,n-1}, stored as the image vector.
using Perm = std::vector<uint8_t>;

Perm identity_perm(int n);
Perm compose(const Perm& p, const Perm& q);  // (p*q)(i) = p[q[i]]
Perm perm_inverse(const Perm& p);
Partition perm_cycle_type(const Perm& p);
long long perm_order(const Perm& p);

uint64_t factorial_u64(int n);  // n <= 20
/// Lehmer-code rank in [0, n!).
uint64_t perm_rank(const Perm& p);
Perm perm_unrank(int n, uint64_t rank);

/// "(1 2 3)(5 6)" with 1-based points; "()" for the identity.
std::string cycle_notation(const Perm& p);
Perm parse_cycles(int n, const std::string& text);

/// Closure of the generated subgroup, by breadth-first products.
std::vector<Perm> group_closure(int n, const std::vector<Perm>& gens);

/// Ranks of all elements of Sym(n) commuting with every generator.
std::vector<uint64_t> centralizer_ranks(int n, const std::vector<Perm>& gens);

/// Cached class data for the full symmetric group on n points.
struct SymmetricGroupContext {
    int n = 0;
    std::vector<Partition> class_types;     // lexicographically decreasing
    std::vector<int> class_of;              // rank -> class index
    std::vector<uint64_t> class_rep;        // class index -> rank of a representative

    static const SymmetricGroupContext& get(int n);
};

}  // namespace coreblocks
