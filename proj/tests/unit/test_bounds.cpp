#include <doctest.h>

#include <cmath>
#include <numbers>

#include "mertens_ap/bounds.hpp"
#include "mertens_ap/error.hpp"
#include "mertens_ap/sieve.hpp"
#include "oracle.hpp"

using namespace mertens_ap;

TEST_CASE("envelope in log form")
{
    const auto e = main_envelope({1e6, 1, 0, 0.1});
    const double lx = std::log(1e6);
    CHECK(e.log_value == doctest::Approx(0.5 * lx + std::sqrt(lx) * std::pow(std::log(lx), 3.1)));
    CHECK(e.linear);
    CHECK(e.value > 212.0 * 1e30);
    CHECK(!e.degenerate);

    const auto huge = main_envelope({1e300, 1, 0, 0.1});
    CHECK(!huge.linear);
    CHECK(std::isinf(huge.value));
    CHECK(std::isfinite(huge.log_value));
}

TEST_CASE("envelope uses x/d and clamps")
{
    const auto e = main_envelope({1000.0, 10, 4, 0.1});
    CHECK(e.d == 2);
    CHECK(e.x_over_d == 500.0);
    const auto deg = main_envelope({100.0, 100, 0, 0.1});
    CHECK(deg.d == 100);
    CHECK(deg.degenerate);
    CHECK(deg.x_over_d == 16.0);
    CHECK(deg.log_value == doctest::Approx(main_envelope({16.0, 1, 0, 0.1}).log_value));
    CHECK_THROWS_AS(main_envelope({100.0, 1, 0, 0.0}), DomainError);
}

TEST_CASE("envelope is increasing in x")
{
    for (auto [q, a] : {std::pair<std::int64_t, std::int64_t>{1, 0}, {6, 3}, {30, 7}}) {
        double prev = -INFINITY;
        for (double x = 16.0; x < 1e200; x *= 1.7) {
            const double v = main_envelope({x, q, a, 0.1}).log_value;
            REQUIRE(v >= prev);
            prev = v;
        }
    }
}

TEST_CASE("comparison table")
{
    const auto rows = comparison_table({100, 10000, 1000000}, 3, 1, 0.1);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1].x == 10000);
    CHECK(rows[1].value == mertens_ap::mertens_ap(10000, 3, 1).value);
    CHECK(rows[1].trivial == doctest::Approx(10000.0 / 3.0));
    for (const auto& r : rows) {
        CHECK(r.within);
        CHECK(std::abs(static_cast<double>(r.value)) <= r.trivial + 1.0);
    }
    const auto q1 = comparison_table({1000000}, 1, 0, 0.1);
    CHECK(q1[0].value == 212);
    // logloglog x < 0 below e^e, where the Gonek column is clamped
    CHECK(comparison_table({10}, 1, 0, 0.1)[0].gonek == 0.0);
    CHECK(comparison_table({1000}, 1, 0, 0.1)[0].gonek > 0.0);
    CHECK(q1[0].gonek == doctest::Approx(1000.0 * std::pow(std::log(std::log(std::log(1e6))), 1.25)));
}

TEST_CASE("standard comparison table is within both bounds")
{
    const auto rows = standard_comparison_table();
    CHECK(rows.size() >= 50);
    for (const auto& r : rows)
        CHECK(r.within);
}

TEST_CASE("first elementary inequality")
{
    CHECK(check_elem1(5.0, 1, 1e6) >= 0.0);
    // lower endpoint with q > 1
    const auto rb = range_bounds(1e300, 3);
    REQUIRE(rb.a > std::numbers::e);
    REQUIRE(rb.a < rb.b);
    CHECK(check_elem1(rb.a, 3, 1e300) >= 0.0);
    CHECK(check_elem1(rb.b, 3, 1e300) >= 0.0);
    CHECK_THROWS_AS(check_elem1(2.0, 1, 1e6), DomainError);
    CHECK_THROWS_AS(check_elem1(rb.b + 1.0, 3, 1e300), DomainError);
    CHECK_THROWS_AS(check_elem1(rb.a - 0.5, 3, 1e300), DomainError);
}

TEST_CASE("second elementary inequality")
{
    CHECK(check_elem2(5.0, 1.0, 10.0) >= 0.0);
    for (double C : {0.5, 1.0, 2.0, 3.0}) {
        const double A = 4.0 * std::pow(C, 4) + 1.0;
        const double V1 = std::exp(A) * std::pow(A, C);
        CAPTURE(C);
        CHECK(check_elem2(A, C, V1) >= 0.0);
    }
    CHECK_THROWS_AS(check_elem2(4.0, 1.0, 10.0), DomainError);
    CHECK_THROWS_AS(check_elem2(5.0, 1.0, 2.0), DomainError);
    CHECK_THROWS_AS(check_elem2(5.0, 0.0, 10.0), DomainError);
}

TEST_CASE("log|L| lower bounds")
{
    const auto zeta = character_from_label("1:");
    const auto r = diagnostic_logL_bounds(zeta, nullptr, 0.6, 1000.0, 5, 1.0);
    CHECK(r.generic_regime);
    CHECK(r.generic_margin > 0.0);

    const auto far = diagnostic_logL_bounds(zeta, nullptr, 2.0, 1000.0, 5, 1.0);
    CHECK(std::abs(far.log_abs_L) < 0.3);
    CHECK(far.generic_margin > 0.0);

    // close to a zero the value dips, but the bound still holds
    const auto ds = oracle::bundled("1:");
    const auto near = diagnostic_logL_bounds(zeta, &ds, 0.501, 21.022039639, 2, 1.0);
    CHECK(near.log_abs_L < -3.0);
    CHECK(near.generic_margin > 0.0);
    CHECK(near.nearest_zero_distance < 1e-4);

    CHECK_THROWS_AS(diagnostic_logL_bounds(zeta, &ds, 0.6, 1000.0, 5, 1.0), CoverageError);
    CHECK_THROWS_AS(diagnostic_logL_bounds(zeta, nullptr, 0.5, 1000.0, 5, 1.0), DomainError);
}

TEST_CASE("contour schedule")
{
    const auto a = contour_schedule(std::ldexp(1.0, 20), 1, nullptr, nullptr, 1.0, 2.0);
    CHECK(a.K == 20);
    CHECK(a.l == 25);
    CHECK(a.degenerate);
    CHECK(a.segments.empty());

    const auto b = contour_schedule(std::ldexp(1.0, 60), 1, nullptr, nullptr, 1.0, 1.0);
    CHECK(b.K == 60);
    CHECK(!b.degenerate);
    REQUIRE(!b.segments.empty());
    CHECK(b.T.size() == static_cast<std::size_t>(b.K - b.l + 1));
    std::int64_t next = std::int64_t{1} << b.l;
    for (const auto& s : b.segments) {
        CHECK(s.n_begin == next);
        CHECK(s.n_end > s.n_begin);
        CHECK(s.V == static_cast<std::int64_t>(std::ceil(range_bounds(std::ldexp(1.0, s.k), 1).b)));
        next = s.n_end;
    }
    CHECK(next == std::int64_t{1} << 60);

    const auto c = contour_schedule(1e6, 100000, nullptr, nullptr, 1.0);
    CHECK(c.constant_branch);
    CHECK(c.l == 10);

    // small enough that the bundled zeros cover [T_l, T_K]
    const auto chi = character_from_label("1:");
    const auto ds = oracle::bundled("1:");
    const auto d = contour_schedule(128.0, 1, &chi, &ds, 1.0);
    REQUIRE(!d.degenerate);
    next = std::int64_t{1} << d.l;
    for (const auto& s : d.segments) {
        CHECK(s.from_zeros);
        CHECK(s.n_begin == next);
        next = s.n_end;
    }
    CHECK(next == 128);
    CHECK_THROWS_AS(contour_schedule(10.0, 1, nullptr, nullptr, 1.0), DomainError);
}
