#include <doctest.h>

#include <cmath>

#include "mertens_ap/arith.hpp"
#include "mertens_ap/error.hpp"
#include "mertens_ap/sieve.hpp"
#include "oracle.hpp"

using namespace mertens_ap;

TEST_CASE("mu and Lambda from the sieve match factorization")
{
    const auto seg = sieve_segment(1, 50000);
    for (std::int64_t n = 1; n <= 50000; ++n) {
        REQUIRE(seg.mu_at(n) == moebius(n));
        const auto f = factorize(n);
        const double want = f.size() == 1 ? std::log(static_cast<double>(f[0].first)) : 0.0;
        REQUIRE(seg.lambda_at(n) == doctest::Approx(want).epsilon(1e-14));
    }
}

TEST_CASE("segments away from 1 agree with the full table")
{
    const auto full = sieve_segment(1, 200000, false);
    const auto part = sieve_segment(123457, 200000, false, 80000);
    for (std::int64_t n = part.lo; n <= part.hi; ++n)
        REQUIRE(part.mu_at(n) == full.mu_at(n));
    CHECK(part.lambda.empty());
}

TEST_CASE("sieve rejects bad ranges")
{
    CHECK_THROWS_AS(sieve_segment(0, 10), DomainError);
    CHECK_THROWS_AS(sieve_segment(10, 5), DomainError);
    CHECK_THROWS_AS(sieve_segment(1, 1000, true, 100), SizeError);
    CHECK_THROWS_AS(mertens(0), DomainError);
}

TEST_CASE("primes_up_to")
{
    const auto p = primes_up_to(30);
    CHECK(p == std::vector<std::int64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
    CHECK(primes_up_to(1).empty());
    CHECK(primes_up_to(1000000).size() == 78498);
}

TEST_CASE("Mertens values against the oracle")
{
    const auto table = sieve_segment(1, 1000000, false);
    for (const auto& r : oracle::read("mertens.csv")) {
        const auto x = std::stoll(r.at("x")), q = std::stoll(r.at("q")), a = std::stoll(r.at("a"));
        const auto want = std::stoll(r.at("value"));
        CAPTURE(x);
        CAPTURE(q);
        CAPTURE(a);
        if (q == 1)
            CHECK(mertens(x) == want);
        CHECK(mertens_ap::mertens_ap(x, q, a).value == want);
        CHECK(mertens_ap::mertens_ap(table, x, q, a).value == want);
    }
}

TEST_CASE("progression sum bookkeeping")
{
    const auto ps = mertens_ap::mertens_ap(100, 4, 2);
    CHECK(ps.d == 2);
    CHECK(ps.b == 1);
    CHECK(ps.r == 2);
    // n ≡ 2 mod 4 means n = 2m with m odd; μ(2m) = -μ(m)
    std::int64_t want = 0;
    for (std::int64_t m = 1; 2 * m <= 100; m += 2)
        want -= moebius(m);
    CHECK(ps.value == want);

    const auto zero = mertens_ap::mertens_ap(1000, 12, 0);
    CHECK(zero.d == 12);
    CHECK(zero.value == 0);  // every multiple of 12 has a square factor
    CHECK(mertens_ap::mertens_ap(1000, 7, -4).a == 3);
}

TEST_CASE("reduction identity")
{
    for (std::int64_t q : {1, 4, 6, 9, 12, 30, 64})
        for (std::int64_t a = 0; a < q; ++a) {
            const auto chk = verify_reduction_identity(5000, q, a);
            CAPTURE(q);
            CAPTURE(a);
            CHECK(chk.holds);
            CHECK(chk.rhs == chk.lhs.value);
        }
}
