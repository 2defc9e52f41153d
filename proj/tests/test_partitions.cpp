#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "waring/errors.hpp"
#include "waring/partitions.hpp"
#include "waring/sieve.hpp"

using namespace waring;

TEST_CASE("ordinary partitions") {
    CHECK(count_partitions(4) == 5);
    CHECK(count_partitions(0) == 1);
    CHECK(count_partitions(10) == 42);
    CHECK(count_partitions(100) == 190569292);
    for (std::uint64_t n = 0; n <= 40; ++n) CHECK(count_partitions(n) == oracle::partitions(n, n));
    CHECK(count_partitions(400) == 6727090051741041926ULL);
    CHECK_THROWS_AS(count_partitions(500), RangeError);
}

TEST_CASE("partitions into exactly j parts") {
    CHECK(count_partitions_into_parts(4, 2) == 2);
    CHECK(count_partitions_into_parts(7, 3) == 4);
    for (std::uint64_t n = 1; n <= 30; ++n) {
        CHECK(count_partitions_into_parts(n, n) == 1);
        for (std::uint64_t j = 1; j <= n; ++j)
            CHECK(count_partitions_into_parts(n, j) == oracle::partitions_exact(n, j, n));
    }
    CHECK(count_partitions_into_parts(3, 5) == 0);
}

TEST_CASE("power partitions") {
    CHECK(count_power_partitions(4, 2) == 2);
    CHECK(count_power_partitions(4, 3) == 1);
    CHECK(count_power_partitions(9, 2) == 4);
    CHECK(count_power_partitions(0, 2) == 1);
    CHECK(count_power_partitions_into_parts(10, 2, 2) == 1);
    for (std::uint64_t j = 1; j <= 20; ++j) CHECK(count_power_partitions_into_parts(j, j, 3) == 1);
    CHECK(count_power_partitions_into_parts(100, 4, 2) == oracle::count_multisets(100, 4, 2));

    SUBCASE("against enumeration") {
        for (unsigned k = 1; k <= 4; ++k)
            for (std::uint64_t n = 1; n <= 80; ++n)
                for (std::uint64_t j = 1; j <= 8; ++j)
                    CHECK(count_power_partitions_into_parts(n, j, k) == oracle::count_multisets(n, j, k));
    }

    SUBCASE("k = 1 and summing over j") {
        PowerPartitionTable t1(1, 200, 200);
        for (unsigned k = 1; k <= 4; ++k) {
            PowerPartitionTable t(k, 200, 200);
            for (std::uint64_t n = 1; n <= 200; ++n) {
                std::uint64_t total = 0;
                for (std::uint64_t j = 1; j <= n; ++j) total += t.count(n, j);
                CHECK(total == count_power_partitions(n, k));
                if (k == 1)
                    for (std::uint64_t j = 1; j <= n; j += 7) CHECK(t1.count(n, j) == count_partitions_into_parts(n, j));
            }
        }
    }
}

TEST_CASE("positive counts match the sieve") {
    for (unsigned k = 1; k <= 3; ++k) {
        PowerPartitionTable t(k, 999, 8);
        RepSieve s = sieve_base(k, 1000);
        for (unsigned j = 1; j <= 8; ++j) {
            if (j > 1) s = advance(s);
            bool agree = true;
            for (std::uint64_t n = 0; n < 1000; ++n)
                if ((t.count(n, j) >= 1) != s.test(n)) agree = false;
            INFO("k=" << k << " j=" << j);
            CHECK(agree);
        }
    }
}

TEST_CASE("shift identity") {
    for (unsigned k = 1; k <= 4; ++k) {
        auto v = check_shift_identity(k, 300, 12);
        INFO("k=" << k);
        CHECK(v.empty());
    }
    // outside n < 2^k j the inequality can be strict
    PowerPartitionTable t(2, 60, 10);
    CHECK(t.count(8, 2) == 1);  // 4+4
    CHECK(t.count(9, 3) == 1);  // 4+4+1
    CHECK(t.count(26, 2) == 1);  // 25+1
    CHECK(t.count(27, 3) == 2);  // 25+1+1, 9+9+9
    CHECK(t.count(27, 3) == oracle::count_multisets(27, 3, 2));
    CHECK_THROWS_AS(t.count(61, 1), PreconditionError);
}
