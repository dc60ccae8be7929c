#include "coreblocks/cores.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "coreblocks/config.hpp"
#include "coreblocks/symblocks.hpp"

namespace coreblocks {

CoreCountSeries count_cores_genfun(int d, int nmax) {
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    if (nmax < 0) throw std::invalid_argument("nmax must be non-negative");
    CoreCountSeries s;
    s.d = d;
    s.nmax = nmax;
    s.counts.assign(nmax + 1, 0);
    s.counts[0] = 1;
    // Divide by (1 - t^j) for every j >= 1.
    for (int j = 1; j <= nmax; ++j)
        for (int k = j; k <= nmax; ++k) s.counts[k] += s.counts[k - j];
    // Multiply by (1 - t^{dj})^d for every j >= 1.
    for (int j = 1; d * j <= nmax; ++j)
        for (int rep = 0; rep < d; ++rep)
            for (int k = nmax; k >= d * j; --k) s.counts[k] -= s.counts[k - d * j];
    return s;
}

namespace {
bool parts_are_d_core(const std::vector<int>& parts, int d, std::vector<char>& scratch) {
    const int k = static_cast<int>(parts.size());
    if (k == 0) return true;
    const int top = parts[0] + k - 1;
    scratch.assign(top + 1, 0);
    for (int i = 0; i < k; ++i) scratch[parts[i] + k - 1 - i] = 1;
    for (int i = 0; i < k; ++i) {
        int a = parts[i] + k - 1 - i;
        if (a - d >= 0 && !scratch[a - d]) return false;
    }
    return true;
}
}  // namespace

long long count_cores_enum(int d, int n) {
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    if (n > config::enumeration_bound())
        throw std::domain_error("enumeration bound exceeded");
    long long count = 0;
    std::vector<char> scratch;
    for_each_partition(n, [&](const std::vector<int>& parts) {
        if (parts_are_d_core(parts, d, scratch)) ++count;
    });
    return count;
}

long long c3_legendre(long long n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    const long long m = 3 * n + 1;
    long long total = 0;
    for (long long a = 1; a * a <= m; ++a) {
        if (m % a) continue;
        for (long long div : {a, m / a}) {
            if (div == a && a * a == m && div != m / a) continue;
            if (div * div == m && div != a) continue;  // counted once below
        }
        auto legendre3 = [](long long v) -> int {
            switch (v % 3) {
                case 1: return 1;
                case 2: return -1;
                default: return 0;
            }
        };
        total += legendre3(a);
        if (a != m / a) total += legendre3(m / a);
    }
    return total;
}

namespace {
bool miller_rabin(unsigned long long n) {
    if (n < 2) return false;
    for (unsigned long long p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                                 29ULL, 31ULL, 37ULL}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    auto mulmod = [](unsigned long long a, unsigned long long b, unsigned long long m) {
        return static_cast<unsigned long long>(
            (static_cast<unsigned __int128>(a) * b) % m);
    };
    auto powmod = [&](unsigned long long a, unsigned long long e, unsigned long long m) {
        unsigned long long r = 1;
        a %= m;
        while (e) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
            e >>= 1;
        }
        return r;
    };
    unsigned long long d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (unsigned long long a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                                 29ULL, 31ULL, 37ULL}) {
        unsigned long long x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}
}  // namespace

bool granville_ono_zero(long long n) {
    if (n < 0) throw std::invalid_argument("n must be non-negative");
    unsigned long long m = static_cast<unsigned long long>(3 * n + 1);
    // Trial division to 10^6, then a deterministic primality check.
    for (unsigned long long p = 2; p <= 1000000ULL && p * p <= m; ++p) {
        if (m % p) continue;
        int e = 0;
        while (m % p == 0) { m /= p; ++e; }
        if (p % 3 == 2 && e % 2 == 1) return true;
    }
    if (m > 1) {
        if (miller_rabin(m)) {
            if (m % 3 == 2) return true;
        } else {
            unsigned long long r = static_cast<unsigned long long>(std::sqrt((double)m));
            while (r * r > m) --r;
            while ((r + 1) * (r + 1) <= m) ++r;
            if (r * r == m && miller_rabin(r)) {
                // p^2 with even exponent: no contribution.
            } else {
                throw std::domain_error("factorization bound exceeded");
            }
        }
    }
    return false;
}

bool defect_zero_sym(int n, int ell) {
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    return count_cores_genfun(ell, n).counts[n] > 0;
}

bool defect_zero_alt(int n, int ell) {
    if (n < 5) throw std::invalid_argument("alternating groups require n >= 5");
    if (!is_prime(ell)) throw std::invalid_argument("ell must be prime");
    if (ell == 2) {
        auto triangular = [](int m) {
            int k = static_cast<int>(std::sqrt(2.0 * m));
            for (int j = std::max(0, k - 2); j <= k + 2; ++j)
                if (j * (j + 1) / 2 == m) return true;
            return false;
        };
        return triangular(n) || triangular(n - 2);
    }
    if (ell == 3) return !granville_ono_zero(n);
    return true;
}

long long value_of_vector(const CoreVector& v) {
    if (static_cast<int>(v.x.size()) != v.d)
        throw std::invalid_argument("vector must have exactly d slots");
    long long sum = 0, sq = 0, lin = 0;
    for (int i = 0; i < v.d; ++i) {
        sum += v.x[i];
        sq += v.x[i] * v.x[i];
        lin += static_cast<long long>(i) * v.x[i];  // slot i+1 has coefficient i
    }
    if (sum != 0) throw std::invalid_argument("coordinate sum must be zero");
    long long twice = v.d * sq + 2 * lin;
    if (twice % 2 != 0) throw std::logic_error("quadratic form value is not an integer");
    return twice / 2;
}

Partition core_from_vector(const CoreVector& v) {
    long long value = value_of_vector(v);  // validates shape and zero sum
    (void)value;
    const int d = v.d;
    long long m = 0;
    for (long long xi : v.x) m = std::max(m, -xi);
    // Runner i-1 holds m + x_i beads, flush at the bottom.
    BetaSet beads;
    for (int i = 0; i < d; ++i) {
        long long count = m + v.x[i];
        for (long long j = 0; j < count; ++j)
            beads.push_back(static_cast<int>(j * d + i));
    }
    return partition_from_beta(beads);
}

CoreVector vector_from_core(const Partition& core, int d) {
    if (d < 2) throw std::invalid_argument("d must be at least 2");
    if (!is_d_core(core, d)) throw std::invalid_argument("partition is not a d-core");
    int k = std::max(core.length(), 1);
    k = ((k + d - 1) / d) * d;
    BetaSet beads = beta_set(core, k);
    CoreVector v;
    v.d = d;
    v.x.assign(d, -(k / d));
    for (int a : beads) ++v.x[a % d];
    return v;
}

std::tuple<long long, long long, long long> three_odd_squares(long long m) {
    if (m <= 0 || m % 8 != 3) throw std::invalid_argument("m must be 3 mod 8");
    long long amax = static_cast<long long>(std::sqrt((double)m));
    if (amax % 2 == 0) --amax;
    while (amax * amax > m) amax -= 2;
    for (long long a = amax; a >= 1; a -= 2) {
        long long rem = m - a * a;
        long long bmax = std::min(a, static_cast<long long>(std::sqrt((double)rem)));
        if (bmax % 2 == 0) --bmax;
        while (bmax * bmax > rem) bmax -= 2;
        for (long long b = bmax; b >= 1; b -= 2) {
            long long c2 = rem - b * b;
            long long c = static_cast<long long>(std::sqrt((double)c2));
            while (c * c < c2) ++c;
            while (c * c > c2) --c;
            if (c * c == c2 && c % 2 == 1 && c <= b) return {a, b, c};
        }
    }
    throw std::logic_error("no three-odd-squares representation found");
}

KimingSolution kiming_construct(int d, long long n) {
    if (d < 9 || d % 2 == 0) throw std::invalid_argument("d must be an odd integer >= 9");
    // Integer form of d^3/4 + 3d/4 - 1 (exact for odd d).
    long long bound = static_cast<long long>(d) * (static_cast<long long>(d) * d + 3) / 4 - 1;
    if (n < bound) throw std::invalid_argument("n below the construction bound");

    KimingSolution s;
    s.d = d;
    s.n = n;
    s.q = n / d;
    s.r = n % d;

    // Parity adjustment keeping n = d*q' + r' with q' odd.
    if (s.q % 2 == 1 && s.r % 4 != 0) {
        s.q_prime = s.q;
        s.r_prime = s.r;
    } else if (s.q % 2 == 0 && s.r % 2 == 0) {
        s.q_prime = s.q + 1;
        s.r_prime = s.r - d;
    } else if (s.q % 2 == 1 && s.r % 4 == 0) {
        s.q_prime = s.q + 2;
        s.r_prime = s.r - 2 * d;
    } else {
        // q even, r odd: r = eps*d mod 4 for exactly one eps in {1,-1}.
        long long eps = ((s.r - d) % 4 + 4) % 4 == 0 ? 1 : -1;
        s.q_prime = s.q - eps;
        s.r_prime = s.r + eps * d;
    }
    if (s.q_prime % 2 != 1 || d * s.q_prime + s.r_prime != n)
        throw std::logic_error("parity adjustment failed");

    long long rr;  // the value whose square enters the three-squares step
    if (((s.r_prime % 2) + 2) % 2 == 1) {
        s.case_tag = 'a';
        if (4 * s.q_prime < s.r_prime * s.r_prime)
            throw std::logic_error("case (a) size condition failed");
        rr = s.r_prime;
    } else {
        if (((s.r_prime % 4) + 4) % 4 != 2)
            throw std::logic_error("r' is neither odd nor 2 mod 4");
        s.case_tag = 'b';
        if (16 * s.q_prime < s.r_prime * s.r_prime)
            throw std::logic_error("case (b) size condition failed");
        rr = s.r_prime / 2;
    }

    auto [a, b, c] = three_odd_squares(4 * s.q_prime - rr * rr);
    s.a = a;
    s.b = b;
    s.c = c;
    if (((rr + s.a + s.b + s.c) % 4 + 4) % 4 != 0) {
        s.a = -s.a;
        s.a_flipped = true;
    }
    if (((rr + s.a + s.b + s.c) % 4 + 4) % 4 != 0)
        throw std::logic_error("flip of a failed to reach 0 mod 4");

    s.alpha = (rr + s.a + s.b + s.c) / 4;
    s.beta = (rr - s.a - s.b + s.c) / 4;
    s.gamma = (rr - s.a + s.b - s.c) / 4;
    s.delta = (rr + s.a - s.b - s.c) / 4;

    s.x.d = d;
    s.x.x.assign(d, 0);
    if (s.case_tag == 'a') {
        s.x.x[0] = -s.alpha; s.x.x[1] = s.alpha;
        s.x.x[2] = -s.beta;  s.x.x[3] = s.beta;
        s.x.x[4] = -s.gamma; s.x.x[5] = s.gamma;
        s.x.x[6] = -s.delta; s.x.x[7] = s.delta;
    } else {
        s.x.x[0] = -s.alpha; s.x.x[1] = -s.beta;
        s.x.x[2] = s.alpha;  s.x.x[3] = s.beta;
        s.x.x[4] = -s.gamma; s.x.x[5] = -s.delta;
        s.x.x[6] = s.gamma;  s.x.x[7] = s.delta;
    }
    if (value_of_vector(s.x) != n)
        throw std::logic_error("constructed vector does not represent n");
    return s;
}

std::string kiming_trace_json(const KimingSolution& s) {
    std::ostringstream os;
    os << "{\"d\":" << s.d << ",\"n\":" << s.n
       << ",\"q\":" << s.q << ",\"r\":" << s.r
       << ",\"q_prime\":" << s.q_prime << ",\"r_prime\":" << s.r_prime
       << ",\"case\":\"" << s.case_tag << "\""
       << ",\"a\":" << s.a << ",\"b\":" << s.b << ",\"c\":" << s.c
       << ",\"a_flipped\":" << (s.a_flipped ? "true" : "false")
       << ",\"alpha\":" << s.alpha << ",\"beta\":" << s.beta
       << ",\"gamma\":" << s.gamma << ",\"delta\":" << s.delta
       << ",\"x\":[";
    for (size_t i = 0; i < s.x.x.size(); ++i) {
        if (i) os << ',';
        os << s.x.x[i];
    }
    os << "],\"value_check\":" << value_of_vector(s.x)
       << ",\"core\":\"" << core_from_vector(s.x).to_string() << "\"}";
    return os.str();
}

}  // namespace coreblocks
