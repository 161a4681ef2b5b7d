#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "mertens_ap/analytic.hpp"
#include "mertens_ap/error.hpp"
#include "mertens_ap/explicit_formula.hpp"
#include "mertens_ap/perron.hpp"
#include "mertens_ap/sieve.hpp"
#include "oracle.hpp"

using namespace mertens_ap;

TEST_CASE("L-values against the oracle")
{
    for (const auto& r : oracle::read("lvalues.csv")) {
        const auto chi = character_from_label(r.at("label"));
        const cplx s{oracle::num(r, "s_re"), oracle::num(r, "s_im")};
        const cplx want{oracle::num(r, "re"), oracle::num(r, "im")};
        CAPTURE(r.at("label"));
        CAPTURE(s);
        const auto v = eval_L(s, chi, 1e-12);
        CHECK(std::abs(v.value - want) <= 1e-10 * std::max(1.0, std::abs(want)));
        if (s.real() > 1.2) {
            const auto d = eval_L({s, chi, LMethod::dirichlet_series, 1e-9});
            CHECK(std::abs(d.value - want) <= 1e-8);
        }
    }
}

TEST_CASE("L evaluation errors")
{
    const auto zeta = character_from_label("1:");
    CHECK_THROWS_AS(eval_L(cplx{1.0, 0.0}, zeta), DomainError);
    CHECK_THROWS_AS(eval_L(cplx{2.0, 0.0}, zeta, 1e-14), DomainError);
    CHECK_THROWS_AS(eval_L({cplx{0.8, 1.0}, zeta, LMethod::dirichlet_series, 1e-10}), DomainError);
    CHECK_THROWS_AS(eval_L(cplx{-40.0, 0.0}, zeta), DomainError);
    // a non-principal character has no pole
    CHECK(std::abs(eval_L(cplx{1.0, 0.0}, character_from_label("4:1")).value - std::numbers::pi / 4) < 1e-12);
}

TEST_CASE("imprimitive L through the primitive one and l_d")
{
    // χ mod 12 induced by χ4: L(s,χ) = L(s,χ4)(1 - χ4(3)3^{-s})
    const auto chi = character_from_label("12:1,0");
    REQUIRE(inducing_primitive(chi).label_string() == "4:1");
    const cplx s{0.7, 9.0};
    const auto lhs = eval_L(s, chi).value;
    const auto rhs = eval_L(s, character_from_label("4:1")).value * (1.0 + std::pow(3.0, -s));
    CHECK(std::abs(lhs - rhs) < 1e-10);
    CHECK(std::abs(eval_l_d(s, character_from_label("4:1"), 3) - (1.0 + std::pow(3.0, -s))) < 1e-14);
    CHECK(std::abs(eval_l_d(s, character_from_label("4:1"), 1) - 1.0) < 1e-15);
}

TEST_CASE("LineLSeries matches pointwise evaluation")
{
    const auto chars = character_group(5);
    const LineLSeries line(chars, 1.2, 500.0, 1e-10);
    std::vector<cplx> out;
    for (double t : {0.0, 3.5, 120.0, 499.0}) {
        const double bound = line.evaluate(t, out);
        CHECK(bound < 1e-9);
        for (std::size_t k = 0; k < chars.size(); ++k) {
            if (chars[k].is_principal() && t == 0.0)
                continue;
            CHECK(std::abs(out[k] - eval_L(cplx{1.2, t}, chars[k]).value) < 1e-9);
        }
    }
    CHECK_THROWS_AS(line.evaluate(600.0, out), DomainError);
}

TEST_CASE("explicit formula balances for the bundled datasets")
{
    const SelbergPair pair{1.0, 2.0};
    for (const char* label : {"1:", "3:1", "4:1"}) {
        const auto chi = character_from_label(label);
        const auto ds = oracle::bundled(label);
        for (double t : {15.0, 40.0})
            for (Sign s : {Sign::plus, Sign::minus}) {
                const auto e = verify_explicit_formula(chi, ds, t, pair, s);
                CAPTURE(label);
                CAPTURE(t);
                CHECK(e.passed());
                CHECK(e.truncation_error_estimate <= 0.05);
                CHECK(e.zeros_used > 0);
            }
    }
}

TEST_CASE("explicit formula pole term")
{
    const SelbergPair pair{1.0, 2.0};
    const auto zeta = verify_explicit_formula(character_from_label("1:"), oracle::bundled("1:"), 20.0, pair);
    CHECK(zeta.pole_term != 0.0);
    // the single-term version is half the symmetric pair for a real even F
    CHECK(zeta.pole_term == doctest::Approx(2.0 * zeta.single_pole_term).epsilon(1e-9));
    const auto chi4 = verify_explicit_formula(character_from_label("4:1"), oracle::bundled("4:1"), 20.0, pair);
    CHECK(chi4.pole_term == 0.0);
}

TEST_CASE("explicit formula preconditions")
{
    const SelbergPair pair{1.0, 2.0};
    const auto chi = character_from_label("4:1");
    const auto ds = oracle::bundled("4:1");
    CHECK_THROWS_AS(verify_explicit_formula(chi, ds, 5.0, pair), DomainError);
    CHECK_THROWS_AS(verify_explicit_formula(chi, ds, ds.gamma_max - 10.0, pair), CoverageError);
    CHECK_THROWS_AS(verify_explicit_formula(character_from_label("8:1,0"), ds, 20.0, pair), DomainError);
    CHECK_THROWS_AS(verify_explicit_formula(character_from_label("3:1"), ds, 20.0, pair), ValidationError);
    CHECK_THROWS_AS(verify_explicit_formula(chi, ds, 20.0, SelbergPair{1.0, 4.0}), SizeError);
}

TEST_CASE("Perron reconstruction")
{
    for (const auto& p : perron_check_all(300, 4)) {
        CAPTURE(p.a);
        CHECK(p.passed);
        CHECK(std::abs(p.assembled - static_cast<double>(p.sieve_value)) < 0.5);
        CHECK(std::abs(p.imag_residue) < 1e-6);
    }
    const auto one = perron_check(100, 4, 2);
    CHECK(one.d == 2);
    CHECK(one.passed);
    CHECK_THROWS_AS(perron_check(5, 3, 1), DomainError);
    CHECK_THROWS_AS(perron_check(100, 600, 1), SizeError);
}
