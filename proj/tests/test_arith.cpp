#include "doctest.h"

#include "parkhedron/arith.hpp"

#include <stdexcept>
#include <vector>

using namespace parkhedron;

TEST_CASE("mobius on small values")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(2) == -1);
    CHECK(mobius(3) == -1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    CHECK_THROWS_AS(mobius(0), std::domain_error);
    CHECK_THROWS_AS(mobius(-3), std::domain_error);
}

TEST_CASE("mobius sums to zero over divisors of n > 1")
{
    for (std::int64_t n = 1; n <= 300; ++n) {
        int s = 0;
        for (auto d : divisors(n))
            s += mobius(d);
        CHECK(s == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("divisors are sorted and complete")
{
    CHECK(divisors(1) == std::vector<std::int64_t>{1});
    CHECK(divisors(12) == std::vector<std::int64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::int64_t>{1, 7, 49});
    CHECK_THROWS_AS(divisors(0), std::domain_error);
}

TEST_CASE("gcd_all")
{
    std::vector<int> a{2, 2};
    CHECK(gcd_all(a) == 2);
    std::vector<int> b{4, 6, 9};
    CHECK(gcd_all(b) == 1);
    CHECK(gcd_all(std::vector<int>{}) == 0);
}

TEST_CASE("factorials, binomials and powers are exact beyond 64 bits")
{
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(25) == BigInt("15511210043330985984000000"));
    CHECK(binomial(28, 14) == 40116600);
    CHECK(binomial(5, 7) == 0);
    CHECK(ipow(BigInt(20), 18) == BigInt("262144000000000000000000"));
    CHECK(catalan(8) == 1430);
}
