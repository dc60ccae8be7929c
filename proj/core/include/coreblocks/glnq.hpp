#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "coreblocks/partition.hpp"

namespace coreblocks {

/// x^{monomial_power} * prod_d phi_d(x)^{factors[d]}.
struct CyclotomicProduct {
    long long monomial_power = 0;
    std::map<int, int> factors;

    mpz_class evaluate(long long q) const;
    std::string to_string() const;
};

CyclotomicProduct multiply(const CyclotomicProduct& a, const CyclotomicProduct& b);

/// Integer coefficients of phi_m, ascending degree. Memoized.
const std::vector<long long>& cyclotomic_poly(int m);

/// x^m - 1 = prod_{e | m} phi_e.
CyclotomicProduct cyclotomic_factor(int m);

/// Polynomial order of the torus T_lambda: prod_i (x^{lambda_i} - 1).
CyclotomicProduct torus_poly_order(const Partition& lambda);

/// |GL_n| = x^{n(n-1)/2} prod_{i=1..n} (x^i - 1).
CyclotomicProduct gl_poly_order(int n);

/// Least d >= 1 with q^d = 1 mod ell.
int mult_order(long long q, int ell);

struct DSeries {
    int d = 0;
    Partition cuspidal_core;
    int weight = 0;
    std::vector<Partition> members;
    int levi_fixed = 0;   // n - w*d
    int levi_block = 0;   // d
    int levi_copies = 0;  // w
};

/// Unipotent characters of GL_n grouped by d-core.
std::vector<DSeries> d_series_partition(int n, int d);

/// Number of d-multipartitions of w.
mpz_class series_size_via_relative_weyl(int d, int w);

/// Signed sum over d-hook removals: lambda - tau with sign (-1)^{height}.
std::map<Partition, long long> lusztig_restriction(const Partition& lambda, int d);

struct GLBlockDescriptor {
    int n = 0;
    long long q = 0;
    int ell = 0;
    int d = 0;
    DSeries series;
    long long defect_valuation = 0;
    std::string defect_group_label;
    bool warning_small_ell = false;  // ell < 7: outside the classification hypotheses
};

std::vector<GLBlockDescriptor> unipotent_blocks_gl(int n, long long q, int ell);

struct SylowPhiDTorus {
    int copies = 0;      // floor(n/d)
    int levi_fixed = 0;  // n - copies*d
    int levi_block = 0;  // d
};

SylowPhiDTorus sylow_phi_d_torus(int n, int d);

}  // namespace coreblocks
