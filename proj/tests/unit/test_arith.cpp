#include <doctest.h>

#include <limits>

#include "mertens_ap/arith.hpp"
#include "mertens_ap/error.hpp"
#include "mertens_ap/parallel.hpp"

using namespace mertens_ap;

TEST_CASE("gcd, lcm and floor modulo")
{
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(12, 18) == 6);
    CHECK(gcd(-12, 18) == 6);
    CHECK(lcm(4, 6) == 12);
    CHECK(mod_floor(-1, 5) == 4);
    CHECK(mod_floor(10, 5) == 0);
    CHECK_THROWS_AS(mod_floor(3, 0), DomainError);
}

TEST_CASE("modular powers and inverses")
{
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(3, 0, 7) == 1);
    CHECK(pow_mod(5, 3, 1) == 0);
    // (2^62)^2 needs 128-bit intermediates
    CHECK(pow_mod(std::int64_t{1} << 62, 2, 1'000'000'007) == 829977023);
    CHECK(inverse_mod(3, 7) == 5);
    CHECK_THROWS_AS(inverse_mod(4, 8), DomainError);
}

TEST_CASE("factorization and multiplicative functions")
{
    const auto f = factorize(360);
    REQUIRE(f.size() == 3);
    CHECK(f[0] == std::pair<std::int64_t, int>{2, 3});
    CHECK(f[1] == std::pair<std::int64_t, int>{3, 2});
    CHECK(f[2] == std::pair<std::int64_t, int>{5, 1});
    CHECK(factorize(1).empty());
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(36) == 12);
    CHECK(euler_phi(97) == 96);
    CHECK(moebius(1) == 1);
    CHECK(moebius(30) == -1);
    CHECK(moebius(6) == 1);
    CHECK(moebius(12) == 0);
    CHECK(isqrt(0) == 0);
    CHECK(isqrt(99) == 9);
    CHECK(isqrt(100) == 10);
    CHECK(isqrt(std::numeric_limits<std::int64_t>::max()) == 3037000499);
}

TEST_CASE("checked arithmetic")
{
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK(checked_add(1, 2) == 3);
    CHECK(checked_mul(-4, 5) == -20);
    CHECK_THROWS_AS(checked_add(big, 1), DomainError);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), DomainError);
}

TEST_CASE("parallel_map keeps order and forwards exceptions")
{
    const auto v = parallel_map(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
    for (std::size_t i = 0; i < v.size(); ++i)
        CHECK(v[i] == static_cast<int>(i * i));
    CHECK_THROWS_AS(parallel_map(10, 3,
                                 [](std::size_t i) {
                                     if (i == 7)
                                         throw DomainError("boom");
                                     return 0;
                                 }),
                    DomainError);
}
