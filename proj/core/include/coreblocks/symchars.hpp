#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coreblocks/partition.hpp"

namespace coreblocks {

/// Conjugacy class of Sym(n), labelled by its cycle type.
struct CycleType {
    Partition partition;
    mpz_class class_size;
    long long order_lcm = 1;

    bool is_ell_regular(int ell) const;
};

/// z_mu = prod_k k^{m_k} m_k! for part multiplicities m_k.
mpz_class centralizer_order(const Partition& mu);

std::vector<CycleType> conjugacy_classes(int n);

/// Character values of Sym(n) by the Murnaghan-Nakayama recursion,
/// memoized on (partition, remaining cycle-type suffix). Cycle parts
/// are stripped in decreasing order.
class MnEvaluator {
public:
    mpz_class value(const Partition& lambda, const Partition& mu);

private:
    std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> memo_;
    mpz_class eval(const Partition& lambda, const std::vector<int>& rest);
};

mpz_class mn_value(const Partition& lambda, const Partition& mu);

struct CharTable {
    int n = 0;
    std::vector<Partition> characters;  // rows, lexicographically decreasing
    std::vector<CycleType> classes;     // columns, same order
    std::vector<std::vector<mpz_class>> values;

    const mpz_class& value(int row, int col) const { return values[row][col]; }
    int row_of(const Partition& lambda) const;
    const mpz_class& degree(const Partition& lambda) const;
    std::string to_json() const;
};

CharTable character_table(int n);

/// Iterated rule: strips w cycles of length d at once.
/// Requires |lambda| = |rest| + w*d and w = full d-weight of lambda.
mpz_class imn_value(const Partition& lambda, int d, int w, const Partition& rest);

/// d=1 consistency of the recursion across all characters of Sym(n).
bool branching_check(int n);

bool check_row_orthogonality(const CharTable& table);
bool check_column_orthogonality(const CharTable& table);

mpz_class factorial(int n);

}  // namespace coreblocks
