#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coreblocks/partition.hpp"
#include "coreblocks/permutation.hpp"
#include "coreblocks/symchars.hpp"

namespace coreblocks {

struct BlockDescriptor {
    int n = 0;
    int ell = 0;
    Partition core;
    int weight = 0;
    std::vector<Partition> members;
    long long defect_valuation = 0;  // nu_ell((w*ell)!)
    bool abelian_defect = false;     // w < ell
    std::string defect_group_label;  // "Sylow_ell(S_{w*ell})"
};

bool is_prime(long long p);
long long valuation(const mpz_class& value, int ell);

/// nu_ell((w*ell)!) by Legendre's formula.
long long defect_valuation(long long w, int ell);

/// ell-blocks of Sym(n), one per ell-core of n - w*ell.
std::vector<BlockDescriptor> blocks(int n, int ell);

/// Weight-zero blocks, i.e. the ell-cores of size n.
std::vector<Partition> defect_zero_blocks(int n, int ell);

/// Height of each member character: nu_ell(degree) minus the block minimum.
std::map<Partition, long long> heights(const BlockDescriptor& b, const CharTable& table);

/// Abelian defect (w < ell) iff all member degrees share one ell-valuation.
bool bhzc_check(int n, int ell);

/// omega_lambda(mu) = class_size(mu) * chi(mu) / chi(1); always an integer.
mpz_class central_character(const Partition& lambda, const CycleType& mu,
                            const CharTable& table);

/// Independent block partition: chi ~ chi' iff omega values agree mod ell.
std::vector<std::vector<Partition>> blocks_via_central_characters(int n, int ell);

/// Central element of Q[Sym(n)], dense over element ranks.
struct CentralElementQ {
    int n = 0;
    std::vector<mpq_class> coeff;

    const mpq_class& at_class(const Partition& type) const;
};

/// Central element of F_ell[Sym(n)].
struct CentralElementMod {
    int n = 0;
    int ell = 0;
    std::vector<unsigned> coeff;

    bool is_zero() const;
};

CentralElementQ central_from_class_function(
    int n, const std::map<Partition, mpq_class>& values);
CentralElementQ identity_element(int n);
CentralElementQ multiply(const CentralElementQ& a, const CentralElementQ& b);
CentralElementQ add(const CentralElementQ& a, const CentralElementQ& b);

CentralElementQ block_idempotent(const BlockDescriptor& b, const CharTable& table);

/// Requires every denominator prime to ell.
CentralElementMod reduce_mod(const CentralElementQ& c, int ell);

/// Truncation of a central element to the centralizer of the ell-group
/// generated by gens. Generators must have ell-power order.
CentralElementMod brauer_morphism(const CentralElementMod& c, const std::vector<Perm>& gens);

/// P with c disjoint ell-cycles acting on the last c*ell of n points.
std::vector<Perm> disjoint_ell_cycles(int n, int ell, int count);

/// Verifies the Brauer-morphism formula for every block idempotent and
/// every P generated by disjoint ell-cycles.
bool fus_sn_check(int n, int ell);

}  // namespace coreblocks
