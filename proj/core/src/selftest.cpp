#include "coreblocks/selftest.hpp"

#include <algorithm>
#include <sstream>

#include "coreblocks/cores.hpp"
#include "coreblocks/definingchar.hpp"
#include "coreblocks/glnq.hpp"
#include "coreblocks/partition.hpp"
#include "coreblocks/symblocks.hpp"
#include "coreblocks/symchars.hpp"

namespace coreblocks {

namespace {

using Check = bool (*)(int, std::string&);

bool partitions_suite(int max_n, std::string& detail) {
    for (int n = 0; n <= std::min(max_n, 12); ++n) {
        long long seen = 0;
        for (const Partition& lambda : enumerate_partitions(n)) {
            ++seen;
            if (conjugate(conjugate(lambda)) != lambda) {
                detail = "conjugate not an involution at " + lambda.to_string();
                return false;
            }
            for (int d = 2; d <= 5; ++d) {
                CoreQuotient cq = d_quotient(lambda, d);
                if (reconstruct_from_quotient(cq) != lambda) {
                    detail = "core/quotient round trip failed at " + lambda.to_string();
                    return false;
                }
                if (!is_d_core(cq.core, d)) {
                    detail = "extracted core is not a core at " + lambda.to_string();
                    return false;
                }
            }
        }
        if (partition_count(n) != static_cast<long>(seen)) {
            detail = "partition_count disagrees with enumeration at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool symchars_suite(int max_n, std::string& detail) {
    for (int n = 1; n <= std::min(max_n, 8); ++n) {
        CharTable t = character_table(n);
        if (!check_row_orthogonality(t) || !check_column_orthogonality(t)) {
            detail = "orthogonality failed at n=" + std::to_string(n);
            return false;
        }
        if (n >= 2 && !branching_check(n)) {
            detail = "single-box recursion check failed at n=" + std::to_string(n);
            return false;
        }
    }
    return true;
}

bool symblocks_suite(int max_n, std::string& detail) {
    for (int n = 2; n <= std::min(max_n, 6); ++n) {
        for (int ell : {2, 3, 5}) {
            auto expected = blocks(n, ell);
            auto oracle = blocks_via_central_characters(n, ell);
            if (expected.size() != oracle.size()) {
                detail = "block count mismatch at n=" + std::to_string(n) +
                         ", ell=" + std::to_string(ell);
                return false;
            }
            std::vector<std::vector<Partition>> lhs;
            for (auto& b : expected) {
                auto m = b.members;
                std::sort(m.begin(), m.end());
                lhs.push_back(std::move(m));
            }
            std::sort(lhs.begin(), lhs.end());
            auto rhs = oracle;
            for (auto& m : rhs) std::sort(m.begin(), m.end());
            std::sort(rhs.begin(), rhs.end());
            if (lhs != rhs) {
                detail = "block partition mismatch at n=" + std::to_string(n) +
                         ", ell=" + std::to_string(ell);
                return false;
            }
            if (!bhzc_check(n, ell)) {
                detail = "height-zero predicate failed at n=" + std::to_string(n) +
                         ", ell=" + std::to_string(ell);
                return false;
            }
        }
    }
    return true;
}

bool group_algebra_suite(int max_n, std::string& detail) {
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        for (int ell : {2, 3}) {
            CharTable t = character_table(n);
            CentralElementQ sum;
            sum.n = n;
            sum.coeff.assign(factorial_u64(n), 0);
            for (const auto& b : blocks(n, ell)) {
                CentralElementQ e = block_idempotent(b, t);
                if (multiply(e, e).coeff != e.coeff) {
                    detail = "idempotency failed at n=" + std::to_string(n);
                    return false;
                }
                sum = add(sum, e);
                reduce_mod(e, ell);  // throws if a denominator is divisible by ell
            }
            if (sum.coeff != identity_element(n).coeff) {
                detail = "idempotents do not sum to 1 at n=" + std::to_string(n);
                return false;
            }
            if (!fus_sn_check(n, ell)) {
                detail = "Brauer-morphism formula failed at n=" + std::to_string(n) +
                         ", ell=" + std::to_string(ell);
                return false;
            }
        }
    }
    return true;
}

bool cores_suite(int max_n, std::string& detail) {
    const int cap = std::min(max_n, 30);
    for (int d = 2; d <= 5; ++d) {
        CoreCountSeries s = count_cores_genfun(d, cap);
        for (int n = 0; n <= cap; ++n) {
            if (s.counts[n] != static_cast<long>(count_cores_enum(d, n))) {
                detail = "core count mismatch at d=" + std::to_string(d) +
                         ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    CoreCountSeries c3 = count_cores_genfun(3, cap);
    for (int n = 0; n <= cap; ++n) {
        if (c3.counts[n] != static_cast<long>(c3_legendre(n))) {
            detail = "divisor formula mismatch at n=" + std::to_string(n);
            return false;
        }
        if ((c3.counts[n] == 0) != granville_ono_zero(n)) {
            detail = "vanishing criterion mismatch at n=" + std::to_string(n);
            return false;
        }
    }
    for (int d : {9, 11, 13}) {
        long long base = static_cast<long long>(d) * (static_cast<long long>(d) * d + 3) / 4 - 1;
        for (long long n = base; n < base + 20; ++n) {
            KimingSolution s = kiming_construct(d, n);
            Partition core = core_from_vector(s.x);
            if (!is_d_core(core, d) || core.size() != n) {
                detail = "constructed witness is wrong at d=" + std::to_string(d) +
                         ", n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool glnq_suite(int max_n, std::string& detail) {
    for (int n = 1; n <= std::min(max_n, 10); ++n) {
        for (int d = 1; d <= n; ++d) {
            mpz_class mass = 0;
            for (const DSeries& s : d_series_partition(n, d)) {
                mpz_class sz = series_size_via_relative_weyl(d, s.weight);
                if (sz != static_cast<long>(s.members.size())) {
                    detail = "series size mismatch at n=" + std::to_string(n) +
                             ", d=" + std::to_string(d);
                    return false;
                }
                mass += sz;
            }
            if (mass != partition_count(n)) {
                detail = "mass check failed at n=" + std::to_string(n) +
                         ", d=" + std::to_string(d);
                return false;
            }
        }
        for (const Partition& lambda : enumerate_partitions(n)) {
            for (int d = 1; d <= n; ++d) {
                Partition core = d_core(lambda, d).core;
                for (const auto& [mu, c] : lusztig_restriction(lambda, d)) {
                    if (d_core(mu, d).core != core) {
                        detail = "restriction changed the d-core at " + lambda.to_string();
                        return false;
                    }
                }
            }
        }
    }
    for (int n = 1; n <= std::min(max_n, 10); ++n) {
        for (long long q : {2, 3, 5}) {
            for (const Partition& lambda : enumerate_partitions(n)) {
                mpz_class direct = 1;
                for (int part : lambda.parts()) {
                    mpz_class pw;
                    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(q),
                                  static_cast<unsigned long>(part));
                    direct *= pw - 1;
                }
                if (torus_poly_order(lambda).evaluate(q) != direct) {
                    detail = "torus order evaluation mismatch at " + lambda.to_string();
                    return false;
                }
            }
        }
    }
    for (int n = 1; n <= 30; ++n) {
        CyclotomicProduct gl = gl_poly_order(n);
        for (int d = 1; d <= n; ++d) {
            auto it = gl.factors.find(d);
            if ((it == gl.factors.end() ? 0 : it->second) != n / d) {
                detail = "phi exponent mismatch at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

bool definingchar_suite(int max_n, std::string& detail) {
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        for (long long q : {2, 3, 4, 5}) {
            auto [ibr, alp] = alperin_weight_count(n, q);
            long long closed = q - 1;
            for (int i = 1; i < n; ++i) closed *= q;
            if (ibr != closed || alp != closed) {
                detail = "count mismatch at n=" + std::to_string(n) +
                         ", q=" + std::to_string(q);
                return false;
            }
            if (static_cast<long long>(enumerate_admissible_pairs(n, q).size()) != closed) {
                detail = "enumeration size mismatch at n=" + std::to_string(n);
                return false;
            }
        }
    }
    return true;
}

}  // namespace

std::vector<SelftestResult> run_selftest(int max_n) {
    const std::pair<const char*, Check> suites[] = {
        {"partitions", partitions_suite},
        {"symchars", symchars_suite},
        {"symblocks", symblocks_suite},
        {"group_algebra", group_algebra_suite},
        {"cores", cores_suite},
        {"glnq", glnq_suite},
        {"definingchar", definingchar_suite},
    };
    std::vector<SelftestResult> out;
    for (auto [name, fn] : suites) {
        SelftestResult r;
        r.name = name;
        try {
            r.passed = fn(max_n, r.detail);
        } catch (const std::exception& e) {
            r.passed = false;
            r.detail = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace coreblocks
