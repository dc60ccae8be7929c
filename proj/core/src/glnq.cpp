#include "coreblocks/glnq.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "coreblocks/symblocks.hpp"

namespace coreblocks {

mpz_class CyclotomicProduct::evaluate(long long q) const {
    if (q < 2) throw std::invalid_argument("evaluation point must be >= 2");
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(q),
                  static_cast<unsigned long>(monomial_power));
    for (auto [d, mult] : factors) {
        const auto& poly = cyclotomic_poly(d);
        mpz_class value = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) value = value * static_cast<long>(q) + static_cast<long>(*it);
        for (int i = 0; i < mult; ++i) result *= value;
    }
    return result;
}

std::string CyclotomicProduct::to_string() const {
    std::ostringstream os;
    bool any = false;
    if (monomial_power > 0) {
        os << "x";
        if (monomial_power > 1) os << "^" << monomial_power;
        any = true;
    }
    for (auto [d, mult] : factors) {
        if (mult == 0) continue;
        if (any) os << "*";
        os << "phi" << d;
        if (mult > 1) os << "^" << mult;
        any = true;
    }
    return any ? os.str() : "1";
}

CyclotomicProduct multiply(const CyclotomicProduct& a, const CyclotomicProduct& b) {
    CyclotomicProduct r = a;
    r.monomial_power += b.monomial_power;
    for (auto [d, mult] : b.factors) r.factors[d] += mult;
    return r;
}

const std::vector<long long>& cyclotomic_poly(int m) {
    static std::map<int, std::vector<long long>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    if (m < 1) throw std::invalid_argument("cyclotomic index must be positive");
    // phi_k = (x^k - 1) / prod_{e | k, e < k} phi_e, by exact long division.
    // Fill every divisor of m in ascending order so the divisions only use
    // already-cached polynomials.
    for (int k = 1; k <= m; ++k) {
        if (m % k || cache.count(k)) continue;
        std::vector<long long> num(k + 1, 0);
        num[0] = -1;
        num[k] = 1;
        for (int e = 1; e < k; ++e) {
            if (k % e) continue;
            const std::vector<long long>& div = cache.at(e);
            std::vector<long long> quot(num.size() - div.size() + 1, 0);
            std::vector<long long> rem = num;
            for (int j = static_cast<int>(quot.size()) - 1; j >= 0; --j) {
                long long lead = rem[j + div.size() - 1];
                if (lead % div.back() != 0) throw std::logic_error("inexact division");
                quot[j] = lead / div.back();
                for (size_t t = 0; t < div.size(); ++t) rem[j + t] -= quot[j] * div[t];
            }
            for (long long v : rem)
                if (v != 0) throw std::logic_error("nonzero remainder in cyclotomic division");
            num = std::move(quot);
        }
        cache.emplace(k, std::move(num));
    }
    return cache.at(m);
}

CyclotomicProduct cyclotomic_factor(int m) {
    if (m < 1) throw std::invalid_argument("m must be positive");
    CyclotomicProduct r;
    for (int e = 1; e <= m; ++e)
        if (m % e == 0) r.factors[e] = 1;
    return r;
}

CyclotomicProduct torus_poly_order(const Partition& lambda) {
    CyclotomicProduct r;
    for (int part : lambda.parts()) r = multiply(r, cyclotomic_factor(part));
    return r;
}

CyclotomicProduct gl_poly_order(int n) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    CyclotomicProduct r;
    r.monomial_power = static_cast<long long>(n) * (n - 1) / 2;
    for (int i = 1; i <= n; ++i) r = multiply(r, cyclotomic_factor(i));
    return r;
}

int mult_order(long long q, int ell) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    if (q % ell == 0) throw std::invalid_argument("ell divides q");
    long long pow = q % ell;
    for (int d = 1; d < ell; ++d) {
        if (pow == 1) return d;
        pow = (pow * (q % ell)) % ell;
    }
    return ell - 1;  // unreachable for prime ell; Fermat guarantees an earlier return
}

std::vector<DSeries> d_series_partition(int n, int d) {
    if (n < 1 || d < 1) throw std::invalid_argument("n and d must be positive");
    std::map<Partition, DSeries> by_core;
    for (const Partition& lambda : enumerate_partitions(n)) {
        CoreQuotient cq = d_core(lambda, d);
        DSeries& s = by_core[cq.core];
        if (s.members.empty()) {
            s.d = d;
            s.cuspidal_core = cq.core;
            s.weight = cq.weight;
            s.levi_fixed = n - cq.weight * d;
            s.levi_block = d;
            s.levi_copies = cq.weight;
        }
        s.members.push_back(lambda);
    }
    std::vector<DSeries> out;
    out.reserve(by_core.size());
    for (auto& [core, s] : by_core) out.push_back(std::move(s));
    return out;
}

mpz_class series_size_via_relative_weyl(int d, int w) {
    if (d < 1 || w < 0) throw std::invalid_argument("need d >= 1, w >= 0");
    // Convolve the partition-count sequence d times.
    std::vector<mpz_class> acc(w + 1, 0);
    acc[0] = 1;
    std::vector<mpz_class> p(w + 1);
    for (int k = 0; k <= w; ++k) p[k] = partition_count(k);
    for (int rep = 0; rep < d; ++rep) {
        std::vector<mpz_class> next(w + 1, 0);
        for (int a = 0; a <= w; ++a)
            for (int b = 0; a + b <= w; ++b) next[a + b] += acc[a] * p[b];
        acc = std::move(next);
    }
    return acc[w];
}

std::map<Partition, long long> lusztig_restriction(const Partition& lambda, int d) {
    if (d < 1) throw std::invalid_argument("d must be positive");
    std::map<Partition, long long> out;
    for (const Hook& h : hooks_of_length(lambda, d)) {
        long long sign = (h.height % 2 == 0) ? 1 : -1;
        out[remove_hook(lambda, h)] += sign;
    }
    return out;
}

std::vector<GLBlockDescriptor> unipotent_blocks_gl(int n, long long q, int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    if (q % ell == 0) throw std::invalid_argument("ell divides q");
    const int d = mult_order(q, ell);
    std::vector<GLBlockDescriptor> out;
    for (DSeries& s : d_series_partition(n, d)) {
        GLBlockDescriptor b;
        b.n = n;
        b.q = q;
        b.ell = ell;
        b.d = d;
        b.warning_small_ell = ell < 7;
        const int wd = s.weight * d;
        mpz_class order = wd > 0 ? gl_poly_order(wd).evaluate(q) : mpz_class(1);
        if (n - wd >= 1)
            order *= static_cast<long>(q - 1);  // central torus of the fixed GL_{n-wd} factor
        b.defect_valuation = valuation(order, ell);
        std::ostringstream label;
        label << "Sylow_" << ell << "(GL_" << wd << "(" << q << ")";
        if (n - wd >= 1) label << " x GL_1(" << q << ")";
        label << ")";
        b.defect_group_label = label.str();
        b.series = std::move(s);
        out.push_back(std::move(b));
    }
    return out;
}

SylowPhiDTorus sylow_phi_d_torus(int n, int d) {
    if (d < 1 || d > n) throw std::invalid_argument("need 1 <= d <= n");
    SylowPhiDTorus t;
    t.copies = n / d;
    t.levi_fixed = n - t.copies * d;
    t.levi_block = d;
    CyclotomicProduct gl = gl_poly_order(n);
    auto it = gl.factors.find(d);
    int exponent = it == gl.factors.end() ? 0 : it->second;
    if (exponent != t.copies)
        throw std::logic_error("phi_d exponent disagrees with floor(n/d)");
    return t;
}

}  // namespace coreblocks
