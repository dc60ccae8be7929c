#pragma once

#include <functional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace coreblocks {

/// Integer partition: weakly decreasing positive parts. The empty
/// partition is the unique partition of 0. Immutable value type.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    /// Accepts "[4,3,1,1]", "4,3,1,1" or "[]"/"" for the empty partition.
    static Partition parse(const std::string& text);

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    std::string to_string() const;  // "[4,3,1,1]", "[]"

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) {
        return a.parts_ < b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Bead positions, strictly decreasing, all >= 0.
using BetaSet = std::vector<int>;

struct Hook {
    int row = 0;        // 1-based
    int col = 0;        // 1-based
    int length = 0;     // arm + leg + 1
    int height = 0;     // leg length
    int bead_from = 0;  // a, the occupied bead
    int bead_to = 0;    // a - length, the empty slot
};

/// Result of core/quotient extraction for a fixed d.
struct CoreQuotient {
    int d = 0;
    Partition core;
    std::vector<Partition> quotient;  // exactly d entries when populated
    int sign = 1;                     // epsilon, from the canonical removal path
    int weight = 0;                   // (|lambda| - |core|) / d
};

Partition conjugate(const Partition& lambda);

/// beta_set(lambda, k)[i] = lambda_{i+1} + k - (i+1); requires k >= length.
BetaSet beta_set(const Partition& lambda, int bead_count);
Partition partition_from_beta(const BetaSet& beads);

/// All hooks of length d, ordered by decreasing bead a.
std::vector<Hook> hooks_of_length(const Partition& lambda, int d);
Partition remove_hook(const Partition& lambda, const Hook& hook);
bool is_d_core(const Partition& lambda, int d);

/// Core, weight and sign (quotient left empty).
CoreQuotient d_core(const Partition& lambda, int d);
/// Core, weight, sign and the d runner partitions.
CoreQuotient d_quotient(const Partition& lambda, int d);
Partition reconstruct_from_quotient(const CoreQuotient& cq);

/// Number of maximal d-hook-removal sequences from lambda to its d-core.
mpz_class removal_path_count(const Partition& lambda, int d);

/// All partitions of n, lexicographically decreasing.
std::vector<Partition> enumerate_partitions(int n);

/// Allocation-light enumeration; parts are passed weakly decreasing.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& fn);

/// Number of partitions of n (exact).
mpz_class partition_count(int n);

}  // namespace coreblocks
