#include <doctest.h>

#include <functional>
#include <set>

#include "coreblocks/cores.hpp"
#include "coreblocks/symblocks.hpp"

using namespace coreblocks;

namespace {

// Independently computed sample of c_d(n), d = 2..7, n = 0..20
// (matching the table at oeis.org/A175595).
const long long kCoreCountSample[6][21] = {
    {1, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {1, 1, 2, 0, 2, 1, 2, 0, 1, 2, 2, 0, 2, 0, 2, 0, 3, 2, 0, 0, 2},
    {1, 1, 2, 3, 1, 3, 3, 3, 4, 4, 2, 2, 7, 3, 5, 6, 2, 4, 7, 3, 4},
    {1, 1, 2, 3, 5, 2, 6, 5, 7, 5, 12, 6, 12, 6, 10, 11, 16, 7, 20, 15, 12},
    {1, 1, 2, 3, 5, 7, 5, 9, 10, 12, 12, 14, 20, 20, 21, 23, 24, 24, 32, 29, 35},
    {1, 1, 2, 3, 5, 7, 11, 8, 15, 16, 21, 21, 28, 24, 44, 36, 49, 45, 63, 49, 74},
};

long long bounded_vector_count(int d, int n, int extra) {
    long long bound = 1;
    while (bound * bound * d < 2 * n) ++bound;
    bound += 1 + extra;
    long long count = 0;
    std::vector<long long> x(d, 0);
    std::function<void(int, long long)> rec = [&](int i, long long sum) {
        if (i == d - 1) {
            x[i] = -sum;
            if (x[i] < -bound || x[i] > bound) return;
            CoreVector v{d, x};
            if (value_of_vector(v) == n) ++count;
            return;
        }
        for (long long t = -bound; t <= bound; ++t) {
            x[i] = t;
            rec(i + 1, sum + t);
        }
    };
    rec(0, 0);
    return count;
}

}  // namespace

TEST_CASE("generating function") {
    CoreCountSeries s3 = count_cores_genfun(3, 10);
    CHECK(s3.counts[0] == 1);
    CHECK(s3.counts[1] == 1);
    CHECK(s3.counts[2] == 2);
    CHECK(s3.counts[3] == 0);
    CHECK(s3.counts[4] == 2);

    CoreCountSeries s2 = count_cores_genfun(2, 30);
    for (int n = 0; n <= 30; ++n) {
        bool triangular = false;
        for (int m = 0; m * (m + 1) / 2 <= n; ++m)
            if (m * (m + 1) / 2 == n) triangular = true;
        CHECK(s2.counts[n] == (triangular ? 1 : 0));
    }

    for (int d = 2; d <= 7; ++d) {
        CoreCountSeries s = count_cores_genfun(d, 20);
        for (int n = 0; n <= 20; ++n)
            CHECK(s.counts[n] == static_cast<long>(kCoreCountSample[d - 2][n]));
    }
    CHECK_THROWS_AS(count_cores_genfun(1, 5), std::invalid_argument);
}

TEST_CASE("enumeration oracle") {
    CHECK(count_cores_enum(3, 4) == 2);
    CHECK(count_cores_enum(5, 0) == 1);
    CHECK(count_cores_enum(3, 3) == 0);
    for (int d = 2; d <= 7; ++d) {
        CoreCountSeries s = count_cores_genfun(d, 40);
        for (int n = 0; n <= 40; ++n)
            CHECK(s.counts[n] == static_cast<long>(count_cores_enum(d, n)));
    }
    CHECK_THROWS_AS(count_cores_enum(3, 10000), std::domain_error);
}

TEST_CASE("divisor formula for d=3") {
    CHECK(c3_legendre(4) == 2);
    CHECK(c3_legendre(0) == 1);
    CHECK(c3_legendre(3) == 0);
    CoreCountSeries s = count_cores_genfun(3, 200);
    for (int n = 0; n <= 200; ++n)
        CHECK(s.counts[n] == static_cast<long>(c3_legendre(n)));
}

TEST_CASE("vanishing criterion") {
    CHECK(granville_ono_zero(3));
    CHECK_FALSE(granville_ono_zero(0));
    for (long long n = 0; n <= 500; ++n)
        CHECK(granville_ono_zero(n) == (c3_legendre(n) == 0));
}

TEST_CASE("defect zero existence") {
    CHECK(defect_zero_sym(4, 3));
    CHECK_FALSE(defect_zero_sym(3, 3));
    for (int n = 1; n <= 30; ++n) {
        bool triangular = false;
        for (int m = 0; m * (m + 1) / 2 <= n; ++m)
            if (m * (m + 1) / 2 == n) triangular = true;
        CHECK(defect_zero_sym(n, 2) == triangular);
    }
    for (int n = 1; n <= 20; ++n)
        for (int ell : {2, 3, 5, 7})
            CHECK(defect_zero_sym(n, ell) == !defect_zero_blocks(n, ell).empty());

    CHECK_FALSE(defect_zero_alt(7, 2));
    CHECK(defect_zero_alt(8, 2));
    for (int n = 5; n <= 200; ++n) CHECK(defect_zero_alt(n, 5));
    CHECK_THROWS_AS(defect_zero_alt(4, 2), std::invalid_argument);
}

TEST_CASE("quadratic form") {
    CoreVector zero{4, {0, 0, 0, 0}};
    CHECK(value_of_vector(zero) == 0);
    CoreVector worked{9, {2, -2, -2, 2, -2, 2, 3, -3, 0}};
    CHECK(value_of_vector(worked) == 188);
    CoreVector bad{3, {1, 0, 0}};
    CHECK_THROWS_AS(value_of_vector(bad), std::invalid_argument);
}

TEST_CASE("core/vector bijection") {
    CoreVector zero{5, {0, 0, 0, 0, 0}};
    CHECK(core_from_vector(zero) == Partition{});

    for (int d = 3; d <= 7; ++d)
        for (int n = 0; n <= 40; ++n)
            for (const Partition& p : enumerate_partitions(n)) {
                if (!is_d_core(p, d)) continue;
                CoreVector v = vector_from_core(p, d);
                CHECK(value_of_vector(v) == n);
                CHECK(core_from_vector(v) == p);
            }

    for (int d = 3; d <= 6; ++d) {
        CoreCountSeries s = count_cores_genfun(d, 30);
        for (int n = 0; n <= 30; ++n) {
            CHECK(s.counts[n] == static_cast<long>(bounded_vector_count(d, n, 0)));
            CHECK(s.counts[n] == static_cast<long>(bounded_vector_count(d, n, 2)));
        }
    }

    CHECK_THROWS_AS(vector_from_core(Partition::parse("[3]"), 3), std::invalid_argument);
}

TEST_CASE("three odd squares") {
    CHECK(three_odd_squares(3) == std::tuple<long long, long long, long long>{1, 1, 1});
    CHECK(three_odd_squares(83) == std::tuple<long long, long long, long long>{9, 1, 1});
    CHECK(three_odd_squares(11) == std::tuple<long long, long long, long long>{3, 1, 1});
    CHECK_THROWS_AS(three_odd_squares(5), std::invalid_argument);
}

TEST_CASE("constructive witness") {
    KimingSolution s = kiming_construct(9, 188);
    CHECK(s.q_prime == 21);
    CHECK(s.r_prime == -1);
    CHECK(s.case_tag == 'a');
    CHECK(s.a == -9);
    CHECK(s.a_flipped);
    CHECK(s.b == 1);
    CHECK(s.c == 1);
    CHECK(s.alpha == -2);
    CHECK(s.beta == 2);
    CHECK(s.gamma == 2);
    CHECK(s.delta == -3);
    CHECK(s.x.x == std::vector<long long>{2, -2, -2, 2, -2, 2, 3, -3, 0});
    CHECK(value_of_vector(s.x) == 188);

    KimingSolution t = kiming_construct(11, 342);
    CHECK(value_of_vector(t.x) == 342);
    Partition core = core_from_vector(t.x);
    CHECK(is_d_core(core, 11));
    CHECK(core.size() == 342);

    CHECK_THROWS_AS(kiming_construct(9, 100), std::invalid_argument);
    CHECK_THROWS_AS(kiming_construct(8, 10000), std::invalid_argument);
    CHECK_THROWS_AS(kiming_construct(7, 10000), std::invalid_argument);

    std::string trace = kiming_trace_json(s);
    CHECK(trace.find("\"q_prime\":21") != std::string::npos);
    CHECK(trace.find("\"value_check\":188") != std::string::npos);
}
