#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "waring/arith.hpp"

using namespace waring;

namespace {

// floor root by linear scan, for small n only
std::uint64_t slow_root(std::uint64_t n, unsigned k) {
    std::uint64_t r = 0;
    while (true) {
        long double next = std::pow(static_cast<long double>(r + 1), k);
        if (next > n) return r;
        ++r;
    }
}

}  // namespace

TEST_CASE("checked arithmetic throws instead of wrapping") {
    CHECK(checked_add(1, 2) == 3);
    CHECK_THROWS_AS(checked_add(UINT64_MAX, 1), RangeError);
    CHECK(checked_mul(1u << 31, 2) == std::uint64_t{1} << 32);
    CHECK_THROWS_AS(checked_mul(std::uint64_t{1} << 32, std::uint64_t{1} << 32), RangeError);
    CHECK(checked_pow(10, 19) == 10000000000000000000ULL);
    CHECK_THROWS_AS(checked_pow(10, 20), RangeError);
    CHECK(checked_pow(0, 0) == 1);
    CHECK(checked_pow(2, 63) == std::uint64_t{1} << 63);
    CHECK_THROWS_AS(checked_pow(2, 64), RangeError);
}

TEST_CASE("pow_at_most reports overflow as too big") {
    std::uint64_t out = 0;
    CHECK(pow_at_most(3, 4, 81, &out));
    CHECK(out == 81);
    CHECK_FALSE(pow_at_most(3, 4, 80));
    CHECK_FALSE(pow_at_most(1u << 20, 4, UINT64_MAX));
}

TEST_CASE("iroot_floor is exact at boundaries") {
    CHECK(iroot_floor(0, 3) == 0);
    CHECK(iroot_floor(1, 7) == 1);
    CHECK(iroot_floor(26, 3) == 2);
    CHECK(iroot_floor(27, 3) == 3);
    CHECK(iroot_floor(UINT64_MAX, 2) == 4294967295ULL);
    CHECK(iroot_floor(UINT64_MAX, 64) == 1);
    CHECK(iroot_floor(25636699123453928ULL, 9) == 66);  // 66^9 < n < 67^9
    for (unsigned k = 1; k <= 12; ++k)
        for (std::uint64_t r = 1; r < 40; ++r) {
            std::uint64_t p = 0;
            if (!pow_at_most(r, k, UINT64_MAX, &p)) break;
            CHECK(iroot_floor(p, k) == r);
            CHECK(iroot_floor(p - 1, k) == r - 1);
        }
}

TEST_CASE("iroot_floor agrees with a linear scan") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 2000; ++i) {
        unsigned k = 1 + rng() % 6;
        std::uint64_t n = rng() % 5'000'000;
        CHECK(iroot_floor(n, k) == slow_root(n, k));
    }
}

TEST_CASE("ratio roots") {
    // ceil((1072/2)^(1/3)) = ceil(8.12) = 9
    CHECK(iroot_ceil_ratio(1072, 2, 3) == 9);
    CHECK(iroot_ceil_ratio(16, 2, 3) == 2);  // exactly 2
    CHECK(iroot_ceil_ratio(0, 5, 3) == 0);
    // floor((13 * 4/3)^(1/2)) = floor(sqrt(17.33)) = 4
    CHECK(iroot_floor_ratio(13 * 4, 3, 2) == 4);
    // floor((6261 * 32/31)^(1/5)) = 5
    CHECK(iroot_floor_ratio(6261 * 32, 31, 5) == 5);
    // numerator above 2^64
    unsigned __int128 big = static_cast<unsigned __int128>(UINT64_MAX) * 4;
    CHECK(iroot_floor_ratio(big, 1, 2) == 8589934591ULL);
    for (std::uint64_t num = 1; num < 3000; num += 7)
        for (std::uint64_t den = 1; den < 9; ++den) {
            std::uint64_t f = iroot_floor_ratio(num, den, 2);
            CHECK(f * f * den <= num);
            CHECK((f + 1) * (f + 1) * den > num);
            std::uint64_t c = iroot_ceil_ratio(num, den, 2);
            CHECK(c * c * den >= num);
            CHECK((c == 0 || (c - 1) * (c - 1) * den < num));
        }
}

TEST_CASE("perfect powers and primes") {
    CHECK(is_perfect_power(100000, 5));
    CHECK_FALSE(is_perfect_power(100001, 5));
    CHECK(is_perfect_power(1, 9));
    CHECK(is_prime(2));
    CHECK(is_prime(11));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
    CHECK(is_prime(1000000007));
}
