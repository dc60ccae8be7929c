#pragma once

#include <string>
#include <tuple>
#include <vector>

#include <gmpxx.h>

#include "coreblocks/partition.hpp"

namespace coreblocks {

/// Coefficients of prod_{n>=1} (1-t^{dn})^d / (1-t^n), truncated.
struct CoreCountSeries {
    int d = 0;
    int nmax = 0;
    std::vector<mpz_class> counts;  // counts[n] = c_d(n)
};

CoreCountSeries count_cores_genfun(int d, int nmax);

/// Exhaustive oracle: partitions of n filtered by is_d_core.
long long count_cores_enum(int d, int n);

/// c_3(n) = sum over divisors m of 3n+1 of the Legendre symbol (m/3).
long long c3_legendre(long long n);

/// True iff some prime p = 2 mod 3 divides 3n+1 to an odd exponent,
/// i.e. iff c_3(n) = 0.
bool granville_ono_zero(long long n);

/// Sym(n) has an ell-block of defect zero iff an ell-core of n exists.
bool defect_zero_sym(int n, int ell);

/// Alt(n), n >= 5: existence of an ell-block of defect zero.
bool defect_zero_alt(int n, int ell);

/// Integer vector of length d with zero coordinate sum; represents a
/// d-core of size sum_i (d/2 x_i^2 + (i-1) x_i), 1-based slots.
struct CoreVector {
    int d = 0;
    std::vector<long long> x;
};

long long value_of_vector(const CoreVector& v);
Partition core_from_vector(const CoreVector& v);
CoreVector vector_from_core(const Partition& core, int d);

/// Odd a >= b >= c >= 1 with a^2+b^2+c^2 = m; requires m = 3 mod 8.
std::tuple<long long, long long, long long> three_odd_squares(long long m);

struct KimingSolution {
    int d = 0;
    long long n = 0;
    long long q = 0, r = 0;              // euclidean division n = d*q + r
    long long q_prime = 0, r_prime = 0;  // parity-adjusted, q' odd
    char case_tag = 'a';                 // 'a': r' odd; 'b': r' = 2 mod 4
    long long a = 0, b = 0, c = 0;       // odd squares decomposition
    bool a_flipped = false;
    long long alpha = 0, beta = 0, gamma = 0, delta = 0;
    CoreVector x;
};

/// Constructive d-core witness for odd d >= 9 and
/// n >= d^3/4 + 3d/4 - 1.
KimingSolution kiming_construct(int d, long long n);

std::string kiming_trace_json(const KimingSolution& s);

}  // namespace coreblocks
