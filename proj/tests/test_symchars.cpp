#include <doctest.h>

#include <algorithm>
#include <map>

#include "coreblocks/symchars.hpp"

using namespace coreblocks;

TEST_CASE("conjugacy classes") {
    auto c3 = conjugacy_classes(3);
    std::map<Partition, mpz_class> sizes;
    for (const CycleType& c : c3) sizes[c.partition] = c.class_size;
    CHECK(sizes[Partition::parse("[1,1,1]")] == 1);
    CHECK(sizes[Partition::parse("[2,1]")] == 3);
    CHECK(sizes[Partition::parse("[3]")] == 2);

    CHECK(conjugacy_classes(1).size() == 1);

    mpz_class mass = 0;
    for (const CycleType& c : conjugacy_classes(5)) mass += c.class_size;
    CHECK(mass == 120);
}

TEST_CASE("cycle type predicates") {
    CycleType t;
    t.partition = Partition::parse("[4,2,1]");
    CHECK_FALSE(t.is_ell_regular(2));
    CHECK(t.is_ell_regular(3));
    t.partition = Partition::parse("[3,1]");
    CHECK(t.order_lcm >= 1);
}

TEST_CASE("murnaghan-nakayama values") {
    for (int n = 1; n <= 6; ++n) {
        Partition triv = Partition(std::vector<int>{n});
        for (const CycleType& mu : conjugacy_classes(n))
            CHECK(mn_value(triv, mu.partition) == 1);
    }
    CHECK(mn_value(Partition::parse("[2,1]"), Partition::parse("[3]")) == -1);
    for (int n = 1; n <= 6; ++n) {
        Partition sign(std::vector<int>(n, 1));
        for (const CycleType& mu : conjugacy_classes(n)) {
            int exp = n - mu.partition.length();
            CHECK(mn_value(sign, mu.partition) == (exp % 2 ? -1 : 1));
        }
    }
    CHECK_THROWS_AS(mn_value(Partition::parse("[2,1]"), Partition::parse("[2]")),
                    std::invalid_argument);
}

TEST_CASE("character table") {
    CharTable t2 = character_table(2);
    REQUIRE(t2.characters.size() == 2);
    CHECK(t2.characters[0] == Partition::parse("[2]"));
    CHECK(t2.value(0, 0) == 1);
    CHECK(t2.value(0, 1) == 1);
    // Column order follows class enumeration; locate columns by cycle type.
    int col21 = -1, colid = -1;
    for (size_t c = 0; c < t2.classes.size(); ++c) {
        if (t2.classes[c].partition == Partition::parse("[2]")) col21 = (int)c;
        if (t2.classes[c].partition == Partition::parse("[1,1]")) colid = (int)c;
    }
    REQUIRE(col21 >= 0);
    REQUIRE(colid >= 0);
    CHECK(t2.value(1, colid) == 1);
    CHECK(t2.value(1, col21) == -1);

    CharTable t5 = character_table(5);
    CHECK(t5.characters.size() == 7);
    CHECK(check_row_orthogonality(t5));
    CHECK(check_column_orthogonality(t5));
    for (const Partition& l : t5.characters) CHECK(t5.degree(l) > 0);
}

TEST_CASE("degrees count standard tableaux") {
    for (int n = 1; n <= 8; ++n) {
        CharTable t = character_table(n);
        for (const Partition& l : t.characters)
            CHECK(t.degree(l) == removal_path_count(l, 1));
    }
}

TEST_CASE("iterated rule") {
    CHECK(imn_value(Partition::parse("[2,1]"), 3, 1, Partition{}) == -1);
    CHECK(imn_value(Partition::parse("[2,2]"), 2, 2, Partition{}) == 2);
    // Weight zero: plain evaluation on the core.
    Partition core = Partition::parse("[1,1]");  // 3-core
    CHECK(imn_value(core, 3, 0, core) == mn_value(core, core));
    CHECK_THROWS_AS(imn_value(Partition::parse("[2,2]"), 2, 1, Partition{}),
                    std::invalid_argument);
}

TEST_CASE("branching") {
    CHECK(branching_check(2));
    CHECK(branching_check(4));
    CHECK(branching_check(7));
}

TEST_CASE("core characters vanish on singular classes") {
    for (int n = 1; n <= 8; ++n) {
        CharTable t = character_table(n);
        for (int ell : {2, 3, 5, 7}) {
            for (const Partition& l : t.characters) {
                if (!is_d_core(l, ell)) continue;
                for (size_t c = 0; c < t.classes.size(); ++c)
                    if (!t.classes[c].is_ell_regular(ell))
                        CHECK(t.value(t.row_of(l), c) == 0);
            }
        }
    }
}

TEST_CASE("serialization") {
    CharTable t = character_table(3);
    std::string s = t.to_json();
    CHECK(s.find("\"n\"") != std::string::npos);
    CHECK(s.find("[2,1]") != std::string::npos);
}
