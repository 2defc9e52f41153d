#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "waring/errors.hpp"
#include "waring/repfind.hpp"
#include "waring/sieve.hpp"

using namespace waring;
using V = std::vector<std::uint64_t>;

TEST_CASE("small representations") {
    auto r = find_representation(1072, 2, 3);
    REQUIRE(r.status == SearchStatus::found);
    CHECK(r.representation->parts == V{9, 7});
    CHECK(r.representation->value() == 1072);

    auto cubes = find_representation(23, 9, 3);
    REQUIRE(cubes.representation);
    CHECK(cubes.representation->parts == V{2, 2, 1, 1, 1, 1, 1, 1, 1});

    auto none = find_representation(6, 2, 2);
    CHECK(none.status == SearchStatus::none);
    CHECK_FALSE(none.representation);

    CHECK(find_representation(5, 5, 7).representation->parts == V{1, 1, 1, 1, 1});
    CHECK_THROWS_AS(find_representation(3, 4, 2), PreconditionError);
    CHECK_THROWS_AS(find_representation(3, 0, 2), PreconditionError);
}

TEST_CASE("first representation in largest-first order") {
    // 50 = 7^2+1^2 = 5^2+5^2: largest base first gives 7,1
    CHECK(find_representation(50, 2, 2).representation->parts == V{7, 1});
    // canonical order means the lexicographically largest tuple
    for (std::uint64_t n = 3; n < 300; ++n) {
        auto r = find_representation(n, 3, 2);
        if (!r.representation) continue;
        const auto& best = r.representation->parts;
        for (std::uint64_t a = 1; a * a <= n; ++a)
            for (std::uint64_t b = 1; b <= a; ++b)
                for (std::uint64_t c = 1; c <= b; ++c)
                    if (a * a + b * b + c * c == n) CHECK(V{a, b, c} <= best);
    }
}

TEST_CASE("completeness against the sieve") {
    for (unsigned k = 1; k <= 4; ++k) {
        RepSieve s = sieve_base(k, 2001);
        auto prune = sieve_exact(k, 4, 2001);
        for (unsigned j = 1; j <= 6; ++j) {
            if (j > 1) s = advance(s);
            bool agree = true, agree_pruned = true;
            for (std::uint64_t n = j; n <= 2000; ++n) {
                auto plain = find_representation(n, j, k);
                auto pruned = find_representation(n, j, k, {&prune, kDefaultNodeBudget});
                if ((plain.status == SearchStatus::found) != s.test(n)) agree = false;
                if ((pruned.status == SearchStatus::found) != s.test(n)) agree_pruned = false;
                if (plain.representation != pruned.representation) agree_pruned = false;
            }
            INFO("k=" << k << " j=" << j);
            CHECK(agree);
            CHECK(agree_pruned);
        }
    }
}

TEST_CASE("soundness on random triples") {
    std::mt19937_64 rng(20240917);
    int found = 0;
    for (int i = 0; i < 10000; ++i) {
        unsigned k = 2 + rng() % 5;
        unsigned j = 1 + rng() % 12;
        std::uint64_t n = j + rng() % 200000;
        auto r = find_representation(n, j, k);
        REQUIRE(r.status != SearchStatus::budget_exhausted);
        if (!r.representation) continue;
        ++found;
        const auto& p = r.representation->parts;
        CHECK(p.size() == j);
        CHECK(std::is_sorted(p.rbegin(), p.rend()));
        CHECK(p.back() >= 1);
        CHECK(r.representation->value() == n);
    }
    CHECK(found > 1000);
}

TEST_CASE("node budget") {
    SearchOptions tight{nullptr, 5};
    auto r = find_representation(1000003, 9, 3, tight);
    CHECK(r.status == SearchStatus::budget_exhausted);
    CHECK(r.nodes <= 6);
    auto full = find_representation(1000003, 9, 3);
    CHECK(full.status != SearchStatus::budget_exhausted);
}

TEST_CASE("n* certificates") {
    auto sq = verify_nstar(169, 2, 1, 5);
    CHECK(certificate_valid(sq));
    REQUIRE(sq.representations.size() == 5);
    CHECK(sq.representations[0].parts == V{13});
    CHECK(sq.representations[1].parts == V{12, 5});

    auto cu = verify_nstar(1072, 3, 2, 9);
    CHECK(certificate_valid(cu));
    CHECK(cu.representations.front().parts == V{9, 7});
    CHECK(cu.representations.back().j() == 9);

    auto doubled = verify_nstar(688, 3, 4, 6);
    CHECK(certificate_valid(doubled));

    SUBCASE("failures name j") {
        try {
            verify_nstar(1072, 3, 1, 5);
            FAIL("expected a certificate failure");
        } catch (const CertificateError& e) {
            CHECK(e.j() == 1);
        }
        // 7 is not a square
        CHECK_THROWS_AS(verify_nstar(7, 2, 1, 4), CertificateError);
        CHECK_THROWS_AS(verify_nstar(1000003, 3, 9, 9, 3), InconclusiveError);
        CHECK_THROWS_AS(verify_nstar(3, 2, 1, 5), PreconditionError);
    }

    SUBCASE("tampered certificates are rejected") {
        auto bad = cu;
        bad.representations[2].parts[0] += 1;
        CHECK_FALSE(certificate_valid(bad));
        bad = cu;
        bad.representations.pop_back();
        CHECK_FALSE(certificate_valid(bad));
        bad = cu;
        std::reverse(bad.representations[3].parts.begin(), bad.representations[3].parts.end());
        CHECK_FALSE(certificate_valid(bad));
    }
}

TEST_CASE("prune sieve respects the RAM cap") {
    CHECK(make_prune_sieve(3, 10000).has_value());
    CHECK(make_prune_sieve(3, 10000)->j() == 4);
    CHECK_FALSE(make_prune_sieve(3, std::uint64_t{1} << 30, 4, SieveOptions{1 << 20, 0}).has_value());
}
