#include "coreblocks/symblocks.hpp"

#include <algorithm>
#include <stdexcept>

#include "coreblocks/config.hpp"

namespace coreblocks {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

long long valuation(const mpz_class& value, int ell) {
    if (value == 0) throw std::invalid_argument("valuation of zero");
    mpz_class v = abs(value);
    long long k = 0;
    while (mpz_divisible_ui_p(v.get_mpz_t(), ell)) {
        v /= ell;
        ++k;
    }
    return k;
}

long long defect_valuation(long long w, int ell) {
    long long m = w * ell, total = 0;
    for (long long p = ell; p <= m; p *= ell) {
        total += m / p;
        if (p > m / ell) break;
    }
    return total;
}

std::vector<BlockDescriptor> blocks(int n, int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    if (n < 1) throw std::invalid_argument("n must be positive");
    std::map<Partition, BlockDescriptor> by_core;
    for (const Partition& lambda : enumerate_partitions(n)) {
        CoreQuotient cq = d_core(lambda, ell);
        auto [it, fresh] = by_core.try_emplace(cq.core);
        BlockDescriptor& b = it->second;
        if (fresh) {
            b.n = n;
            b.ell = ell;
            b.core = cq.core;
            b.weight = cq.weight;
            b.defect_valuation = defect_valuation(cq.weight, ell);
            b.abelian_defect = cq.weight < ell;
            b.defect_group_label =
                "Sylow_" + std::to_string(ell) + "(S_" + std::to_string(cq.weight * ell) + ")";
        }
        b.members.push_back(lambda);
    }
    std::vector<BlockDescriptor> out;
    out.reserve(by_core.size());
    for (auto& [core, b] : by_core) out.push_back(std::move(b));
    return out;
}

std::vector<Partition> defect_zero_blocks(int n, int ell) {
    std::vector<Partition> out;
    for (const Partition& lambda : enumerate_partitions(n))
        if (is_d_core(lambda, ell)) out.push_back(lambda);
    return out;
}

std::map<Partition, long long> heights(const BlockDescriptor& b, const CharTable& table) {
    if (table.n != b.n) throw std::invalid_argument("table size does not match block");
    std::map<Partition, long long> vals;
    long long minv = -1;
    for (const Partition& m : b.members) {
        long long v = valuation(table.degree(m), b.ell);
        vals[m] = v;
        if (minv < 0 || v < minv) minv = v;
    }
    for (auto& [m, v] : vals) v -= minv;
    return vals;
}

bool bhzc_check(int n, int ell) {
    CharTable table = character_table(n);
    for (const BlockDescriptor& b : blocks(n, ell)) {
        auto h = heights(b, table);
        bool all_zero = std::all_of(h.begin(), h.end(),
                                    [](const auto& kv) { return kv.second == 0; });
        if (all_zero != b.abelian_defect) return false;
    }
    return true;
}

mpz_class central_character(const Partition& lambda, const CycleType& mu,
                            const CharTable& table) {
    int row = table.row_of(lambda);
    int col = -1;
    for (size_t c = 0; c < table.classes.size(); ++c)
        if (table.classes[c].partition == mu.partition) col = static_cast<int>(c);
    if (col < 0) throw std::invalid_argument("cycle type not in table");
    mpq_class omega(mu.class_size * table.values[row][col], table.degree(lambda));
    omega.canonicalize();
    if (omega.get_den() != 1)
        throw std::logic_error("central character value is not an algebraic integer");
    return omega.get_num();
}

std::vector<std::vector<Partition>> blocks_via_central_characters(int n, int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    CharTable table = character_table(n);
    // Key: residues of all omega values mod ell.
    std::map<std::vector<unsigned long>, std::vector<Partition>> groups;
    for (const Partition& lambda : table.characters) {
        std::vector<unsigned long> key;
        key.reserve(table.classes.size());
        for (const CycleType& mu : table.classes) {
            mpz_class omega = central_character(lambda, mu, table);
            mpz_class res = omega % ell;
            if (res < 0) res += ell;
            key.push_back(res.get_ui());
        }
        groups[key].push_back(lambda);
    }
    std::vector<std::vector<Partition>> out;
    for (auto& [k, v] : groups) out.push_back(std::move(v));
    return out;
}

const mpq_class& CentralElementQ::at_class(const Partition& type) const {
    const auto& ctx = SymmetricGroupContext::get(n);
    for (size_t c = 0; c < ctx.class_types.size(); ++c)
        if (ctx.class_types[c] == type) return coeff[ctx.class_rep[c]];
    throw std::invalid_argument("no such cycle type");
}

bool CentralElementMod::is_zero() const {
    return std::all_of(coeff.begin(), coeff.end(), [](unsigned v) { return v == 0; });
}

namespace {
void check_expansion_bound(int n) {
    if (n > config::group_expansion_bound())
        throw std::domain_error("group expansion bound exceeded");
}
}  // namespace

CentralElementQ central_from_class_function(
    int n, const std::map<Partition, mpq_class>& values) {
    check_expansion_bound(n);
    const auto& ctx = SymmetricGroupContext::get(n);
    CentralElementQ out;
    out.n = n;
    out.coeff.resize(factorial_u64(n));
    std::vector<mpq_class> by_class(ctx.class_types.size());
    for (size_t c = 0; c < ctx.class_types.size(); ++c) {
        auto it = values.find(ctx.class_types[c]);
        if (it != values.end()) by_class[c] = it->second;
    }
    for (uint64_t r = 0; r < out.coeff.size(); ++r)
        out.coeff[r] = by_class[ctx.class_of[r]];
    return out;
}

CentralElementQ identity_element(int n) {
    check_expansion_bound(n);
    CentralElementQ out;
    out.n = n;
    out.coeff.resize(factorial_u64(n));
    out.coeff[perm_rank(identity_perm(n))] = 1;
    return out;
}

CentralElementQ multiply(const CentralElementQ& a, const CentralElementQ& b) {
    if (a.n != b.n) throw std::invalid_argument("mismatched degrees");
    const int n = a.n;
    const auto& ctx = SymmetricGroupContext::get(n);
    const uint64_t total = factorial_u64(n);
    CentralElementQ out;
    out.n = n;
    out.coeff.resize(total);
    // The product of central elements is central: compute one
    // representative per class and broadcast.
    std::vector<mpq_class> by_class(ctx.class_types.size());
    for (size_t c = 0; c < ctx.class_types.size(); ++c) {
        Perm x = perm_unrank(n, ctx.class_rep[c]);
        mpq_class sum = 0;
        for (uint64_t g = 0; g < total; ++g) {
            if (a.coeff[g] == 0) continue;
            Perm gp = perm_unrank(n, g);
            uint64_t h = perm_rank(compose(perm_inverse(gp), x));
            if (b.coeff[h] == 0) continue;
            sum += a.coeff[g] * b.coeff[h];
        }
        by_class[c] = std::move(sum);
    }
    for (uint64_t r = 0; r < total; ++r) out.coeff[r] = by_class[ctx.class_of[r]];
    return out;
}

CentralElementQ add(const CentralElementQ& a, const CentralElementQ& b) {
    if (a.n != b.n) throw std::invalid_argument("mismatched degrees");
    CentralElementQ out = a;
    for (size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += b.coeff[i];
    return out;
}

CentralElementQ block_idempotent(const BlockDescriptor& b, const CharTable& table) {
    check_expansion_bound(b.n);
    if (table.n != b.n) throw std::invalid_argument("table size does not match block");
    mpz_class nfac = factorial(b.n);
    std::map<Partition, mpq_class> values;
    for (const CycleType& mu : table.classes) {
        mpz_class s = 0;
        for (const Partition& lambda : b.members) {
            int row = table.row_of(lambda);
            int col = -1;
            for (size_t c = 0; c < table.classes.size(); ++c)
                if (table.classes[c].partition == mu.partition) col = static_cast<int>(c);
            s += table.degree(lambda) * table.values[row][col];
        }
        mpq_class v(s, nfac);
        v.canonicalize();
        values[mu.partition] = v;
    }
    return central_from_class_function(b.n, values);
}

CentralElementMod reduce_mod(const CentralElementQ& c, int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    CentralElementMod out;
    out.n = c.n;
    out.ell = ell;
    out.coeff.resize(c.coeff.size());
    for (size_t i = 0; i < c.coeff.size(); ++i) {
        const mpq_class& q = c.coeff[i];
        if (q == 0) continue;
        mpz_class den = q.get_den();
        if (mpz_divisible_ui_p(den.get_mpz_t(), ell))
            throw std::domain_error("coefficient denominator divisible by ell");
        mpz_class num_res = q.get_num() % ell;
        if (num_res < 0) num_res += ell;
        mpz_class den_res = den % ell, inv;
        mpz_invert(inv.get_mpz_t(), den_res.get_mpz_t(), mpz_class(ell).get_mpz_t());
        out.coeff[i] = mpz_class(num_res * inv % ell).get_ui();
    }
    return out;
}

CentralElementMod brauer_morphism(const CentralElementMod& c, const std::vector<Perm>& gens) {
    for (const Perm& g : gens) {
        long long o = perm_order(g);
        while (o % c.ell == 0) o /= c.ell;
        if (o != 1) throw std::invalid_argument("generator order is not an ell-power");
    }
    CentralElementMod out;
    out.n = c.n;
    out.ell = c.ell;
    out.coeff.assign(c.coeff.size(), 0);
    for (uint64_t r : centralizer_ranks(c.n, gens)) out.coeff[r] = c.coeff[r];
    return out;
}

std::vector<Perm> disjoint_ell_cycles(int n, int ell, int count) {
    if (count * ell > n) throw std::invalid_argument("too many cycles");
    std::vector<Perm> gens;
    const int fixed = n - count * ell;
    for (int c = 0; c < count; ++c) {
        Perm g = identity_perm(n);
        int base = fixed + c * ell;
        for (int j = 0; j < ell; ++j)
            g[base + j] = static_cast<uint8_t>(base + (j + 1) % ell);
        gens.push_back(std::move(g));
    }
    return gens;
}

bool fus_sn_check(int n, int ell) {
    check_expansion_bound(n);
    CharTable table = character_table(n);
    std::vector<BlockDescriptor> blks = blocks(n, ell);
    for (int count = 1; count * ell <= n; ++count) {
        auto gens = disjoint_ell_cycles(n, ell, count);
        const int n_p = n - count * ell;
        auto central = centralizer_ranks(n, gens);

        // Idempotents of Sym(n_p) mod ell, indexed by core, when n_p >= 1.
        std::map<Partition, CentralElementMod> small;
        if (n_p >= 1) {
            CharTable small_table = character_table(n_p);
            for (const BlockDescriptor& sb : blocks(n_p, ell))
                small.emplace(sb.core, reduce_mod(block_idempotent(sb, small_table), ell));
        }

        for (const BlockDescriptor& b : blks) {
            CentralElementMod img =
                brauer_morphism(reduce_mod(block_idempotent(b, table), ell), gens);
            const bool survives = n_p >= b.core.size();
            for (uint64_t r : central) {
                Perm h = perm_unrank(n, r);
                // h centralizes P, so it permutes the fixed points {0..n_p-1}.
                bool splits = true;
                for (int i = 0; i < n_p; ++i)
                    if (h[i] >= n_p) splits = false;
                if (!splits) throw std::logic_error("centralizer element does not split");
                unsigned expect = 0;
                if (survives) {
                    bool tail_identity = true;
                    for (int i = n_p; i < n; ++i)
                        if (h[i] != i) tail_identity = false;
                    if (tail_identity) {
                        if (n_p == 0) {
                            expect = 1;  // b_kappa over the trivial group is 1
                        } else {
                            Perm h1(h.begin(), h.begin() + n_p);
                            expect = small.at(b.core).coeff[perm_rank(h1)];
                        }
                    }
                }
                if (img.coeff[r] != expect) return false;
            }
        }
    }
    return true;
}

}  // namespace coreblocks
