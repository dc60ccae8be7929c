#include "coreblocks/definingchar.hpp"

#include <stdexcept>

namespace coreblocks {

bool is_prime_power(long long q) {
    if (q < 2) return false;
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p) continue;
        while (q % p == 0) q /= p;
        return q == 1;
    }
    return true;  // q itself is prime
}

namespace {
void require_inputs(int n, long long q) {
    if (n < 1) throw std::invalid_argument("n must be positive");
    if (!is_prime_power(q)) throw std::invalid_argument("q must be a prime power >= 2");
}
}  // namespace

std::vector<AdmissiblePair> enumerate_admissible_pairs(int n, long long q) {
    require_inputs(n, q);
    const long long r = q - 1;  // theta entries live in Z/(q-1)
    std::vector<AdmissiblePair> out;
    std::vector<int> theta(n, 0);
    while (true) {
        std::vector<int> s;  // S_theta
        for (int i = 1; i < n; ++i)
            if (theta[i - 1] == theta[i]) s.push_back(i);
        const size_t subsets = size_t{1} << s.size();
        for (size_t mask = 0; mask < subsets; ++mask) {
            AdmissiblePair p;
            p.n = n;
            p.q = q;
            p.theta = theta;
            for (size_t b = 0; b < s.size(); ++b)
                if (mask & (size_t{1} << b)) p.I.push_back(s[b]);
            out.push_back(std::move(p));
        }
        int pos = n - 1;
        while (pos >= 0 && theta[pos] == r - 1) theta[pos--] = 0;
        if (pos < 0) break;
        ++theta[pos];
    }
    return out;
}

std::pair<long long, long long> alperin_weight_count(int n, long long q) {
    require_inputs(n, q);
    const long long r = q - 1;

    // theta-first: sum over theta of 2^{|S_theta|}, by direct enumeration.
    long long ibr = 0;
    {
        std::vector<int> theta(n, 0);
        while (true) {
            int s = 0;
            for (int i = 1; i < n; ++i)
                if (theta[i - 1] == theta[i]) ++s;
            ibr += 1LL << s;
            int pos = n - 1;
            while (pos >= 0 && theta[pos] == r - 1) theta[pos--] = 0;
            if (pos < 0) break;
            ++theta[pos];
        }
    }

    // subset-first: for each I, count theta constant along every run of
    // coordinates joined by I; that is r per run.
    long long alp = 0;
    for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
        int runs = 1;
        for (int i = 1; i < n; ++i)
            if (!(mask & (1u << (i - 1)))) ++runs;
        long long count = 1;
        for (int k = 0; k < runs; ++k) count *= r;
        alp += count;
    }
    return {ibr, alp};
}

long long steinberg_count(int n, long long q) {
    require_inputs(n, q);
    return q - 1;
}

}  // namespace coreblocks
