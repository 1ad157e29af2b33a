#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "phigraph/inverse_totient.hpp"

using namespace phigraph;

TEST_CASE("inverse totient golden values") {
    REQUIRE(inverse_totient(1).solutions == std::vector<u64>{1, 2});
    REQUIRE(inverse_totient(2).solutions == std::vector<u64>{3, 4, 6});
    REQUIRE(inverse_totient(4).solutions == std::vector<u64>{5, 8, 10, 12});
    REQUIRE(inverse_totient(6).solutions == std::vector<u64>{7, 9, 14, 18});
    REQUIRE(inverse_totient(8).solutions == std::vector<u64>{15, 16, 20, 24, 30});
    REQUIRE(inverse_totient(10).solutions == std::vector<u64>{11, 22});
    REQUIRE(inverse_totient(12).solutions == std::vector<u64>{13, 21, 26, 28, 36, 42});
    for (u64 m : {3ull, 5ull, 7ull, 9ull, 11ull, 14ull, 26ull})
        REQUIRE(inverse_totient(m).solutions.empty());
}

TEST_CASE("inverse totient solutions are sorted, unique and correct") {
    for (u64 m = 1; m <= 300; ++m) {
        auto s = inverse_totient(m).solutions;
        REQUIRE(std::is_sorted(s.begin(), s.end()));
        REQUIRE(std::adjacent_find(s.begin(), s.end()) == s.end());
        for (u64 x : s) REQUIRE(totient(x) == m);
    }
}

TEST_CASE("inverse totient agrees with the brute-force scan") {
    for (u64 m = 1; m <= 200; ++m) {
        u64 bound = 2 * m * m + 10;
        REQUIRE(inverse_totient(m).solutions == inverse_totient_brute(m, bound).solutions);
    }
}

TEST_CASE("odd targets above one have no preimages") {
    for (u64 m : {3ull, 99ull, 12345ull, 1'000'000'001ull}) {
        CAPTURE(m);
        REQUIRE(inverse_totient(m).solutions.empty());
    }
}

TEST_CASE("large power-of-two target") {
    auto s = inverse_totient(u64(1) << 31).solutions;
    REQUIRE_FALSE(s.empty());
    for (u64 x : s) REQUIRE(totient(x) == u64(1) << 31);
}

TEST_CASE("inverse totient domain") {
    REQUIRE_THROWS_AS(inverse_totient(0), std::domain_error);
    REQUIRE_THROWS_AS(inverse_totient(u64(1) << 32), std::domain_error);
    REQUIRE_THROWS_AS(inverse_totient_brute(1, u64(1) << 40), std::domain_error);
    REQUIRE_THROWS_AS(inverse_totient_brute(0, 10), std::domain_error);
}

TEST_CASE("brute scan respects its bound") {
    REQUIRE(inverse_totient_brute(2, 5).solutions == std::vector<u64>{3, 4});
    REQUIRE(inverse_totient_brute(2, 6).solutions == std::vector<u64>{3, 4, 6});
}

TEST_CASE("nontotients") {
    REQUIRE(is_nontotient(14));
    REQUIRE(is_nontotient(26));
    REQUIRE(is_nontotient(3));
    REQUIRE_FALSE(is_nontotient(2));
    for (u64 m = 2; m <= 100; m += 2)
        REQUIRE(is_nontotient(m) == inverse_totient_brute(m, 2 * m * m + 10).solutions.empty());
}
