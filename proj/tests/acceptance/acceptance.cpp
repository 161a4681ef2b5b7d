// One PASS/FAIL line per acceptance criterion. Pass criterion numbers to run a subset.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mertens_ap/arith.hpp"
#include "mertens_ap/bounds.hpp"
#include "mertens_ap/characters.hpp"
#include "mertens_ap/explicit_formula.hpp"
#include "mertens_ap/parallel.hpp"
#include "mertens_ap/perron.hpp"
#include "mertens_ap/selberg.hpp"
#include "mertens_ap/sieve.hpp"
#include "mertens_ap/zeros.hpp"

using namespace mertens_ap;

namespace {

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Criterion {
    int id;
    const char* name;
    double budget_s;
    std::function<Outcome()> run;
};

class Rng {
public:
    explicit Rng(std::uint64_t seed) : g_(seed) {}
    double uniform(double lo, double hi) { return lo + (hi - lo) * static_cast<double>(g_() >> 11) * 0x1.0p-53; }
    std::int64_t integer(std::int64_t lo, std::int64_t hi)
    {
        return lo + static_cast<std::int64_t>(g_() % static_cast<std::uint64_t>(hi - lo + 1));
    }

private:
    std::mt19937_64 g_;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0)
{
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

Outcome sieve_oracle()
{
    // small segments so the run crosses many segment boundaries
    const std::int64_t n = 1'000'000, width = 65536;
    std::int64_t mismatches = 0, running = 0;
    std::vector<std::int64_t> checkpoints;
    for (std::int64_t lo = 1; lo <= n; lo += width) {
        const auto seg = sieve_segment(lo, std::min(n, lo + width - 1), false, width);
        for (std::int64_t k = seg.lo; k <= seg.hi; ++k) {
            if (seg.mu_at(k) != moebius(k))
                ++mismatches;
            running += seg.mu_at(k);
            if (k == 10 || k == 1000 || k == n)
                checkpoints.push_back(running);
        }
    }
    const bool values = checkpoints == std::vector<std::int64_t>{-1, 2, 212} && mertens(n) == 212;
    return {mismatches == 0 && values, fmt("mu mismatches %.0f; M(10)=%.0f M(1000)=%.0f", static_cast<double>(mismatches),
                                           static_cast<double>(checkpoints[0]), static_cast<double>(checkpoints[1])) +
                                           " M(10^6)=" + std::to_string(checkpoints[2])};
}

Outcome partition()
{
    Rng rng(101);
    const auto table = sieve_segment(1, 100000, false);
    int bad = 0;
    for (int i = 0; i < 500; ++i) {
        const auto x = rng.integer(1, 100000), q = rng.integer(1, 200);
        std::int64_t total = 0;
        for (std::int64_t a = 0; a < q; ++a)
            total += mertens_ap::mertens_ap(table, x, q, a).value;
        std::int64_t direct = 0;
        for (std::int64_t k = 1; k <= x; ++k)
            direct += table.mu_at(k);
        bad += total != direct;
    }
    return {bad == 0, std::to_string(bad) + " of 500 cases differ"};
}

Outcome reduction()
{
    Rng rng(202);
    int bad = 0, with_d = 0;
    for (int i = 0; i < 1000; ++i) {
        const auto x = rng.integer(1, 100000), q = rng.integer(1, 200);
        std::int64_t a = rng.integer(0, q - 1);
        if (i % 2 == 0 && q > 1) {
            // force a common factor with q
            const auto f = factorize(q);
            const auto p = f[static_cast<std::size_t>(rng.integer(0, static_cast<std::int64_t>(f.size()) - 1))].first;
            a = mod_floor(p * rng.integer(0, q), q);
        }
        const auto chk = verify_reduction_identity(x, q, a);
        with_d += chk.lhs.d > 1;
        bad += !chk.holds;
    }
    return {bad == 0 && with_d > 0, std::to_string(bad) + " of 1000 fail; " + std::to_string(with_d) + " with d > 1"};
}

Outcome orthogonality()
{
    Rng rng(303);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const auto q = rng.integer(1, 100);
        const auto n = rng.integer(0, 3 * q);
        std::int64_t a = rng.integer(0, q - 1);
        while (gcd(a, q) != 1)
            a = rng.integer(0, q - 1);
        // bias a quarter of the samples onto n ≡ a
        const auto nn = i % 4 == 0 ? a + q * rng.integer(0, 3) : n;
        const std::int64_t want = mod_floor(nn - a, q) == 0 ? euler_phi(q) : 0;
        bad += orthogonality_sum_exact(q, nn, a) != want;
    }
    std::int64_t pairs = 0, bad_pairs = 0;
    for (std::int64_t q = 1; q <= 100; ++q) {
        const auto chars = character_group(q);
        const auto phi = euler_phi(q);
        for (std::size_t i = 0; i < chars.size(); ++i)
            for (std::size_t j = 0; j < chars.size(); ++j) {
                ++pairs;
                bad_pairs += character_inner_product_exact(chars[i], chars[j]) != (i == j ? phi : 0);
            }
    }
    return {bad == 0 && bad_pairs == 0, std::to_string(bad) + " of 10^4 (n,a) samples and " +
                                            std::to_string(bad_pairs) + " of " + std::to_string(pairs) +
                                            " character pairs fail"};
}

Outcome selberg()
{
    Rng rng(404);
    std::int64_t violations = 0;
    double worst_mass = -1.0, worst_hat = 0.0;
    for (double h : {0.5, 1.0, 2.0})
        for (double delta : {2.0, 4.0, 8.0}) {
            const SelbergPair p{h, delta};
            std::vector<double> pts{h, -h, 0.0};
            while (pts.size() < 10000)
                pts.push_back(rng.uniform(-h - 6.0, h + 6.0));
            violations += sandwich_violations(p, pts);
            for (Sign s : {Sign::plus, Sign::minus}) {
                worst_mass = std::max(worst_mass, l1_mass(p, s).value - 1.0 / delta);
                for (double x : {delta, 1.2 * delta, 2.0 * delta, -1.5 * delta})
                    worst_hat = std::max(worst_hat, std::abs(fourier_F(p, s, x).value));
            }
        }
    return {violations == 0 && worst_mass <= 1e-6 && worst_hat <= 1e-6,
            std::to_string(violations) + " sandwich violations; max mass - 1/delta " +
                fmt("%.3g; max |hat F| beyond delta %.3g", worst_mass, worst_hat)};
}

Outcome explicit_formula()
{
    const SelbergPair pair{1.0, 2.0};
    int bad = 0, total = 0;
    double worst_diff = 0.0, worst_est = 0.0;
    for (const char* label : {"4:1", "3:1"}) {
        const auto chi = character_from_label(label);
        const auto ds = find_dataset(MERTENS_AP_TEST_DATA_DIR, label);
        for (double t : {15.0, 20.0, 30.0, 50.0})
            for (Sign s : {Sign::plus, Sign::minus}) {
                const auto e = verify_explicit_formula(chi, ds, t, pair, s);
                ++total;
                bad += !(e.passed() && e.truncation_error_estimate <= 0.05);
                worst_diff = std::max(worst_diff, std::abs(e.difference()));
                worst_est = std::max(worst_est, e.truncation_error_estimate);
            }
    }
    return {bad == 0, std::to_string(bad) + " of " + std::to_string(total) +
                          fmt(" fail; max |lhs-rhs| %.3g, max estimate %.3g", worst_diff, worst_est)};
}

Outcome inequalities()
{
    Rng rng(505);
    std::int64_t n1 = 0, f1 = 0, n2 = 0, f2 = 0;
    double m1 = INFINITY, m2 = INFINITY;
    const double lo = std::log(1e6);
    while (n1 < 100000) {
        const auto q = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::exp(rng.uniform(0.0, lo))));
        const double T = std::exp(rng.uniform(lo, 600.0)) / static_cast<double>(q);
        const auto rb = range_bounds(T, q);
        const double v_lo = std::max(rb.a, std::exp(1.0) * (1.0 + 1e-12));
        if (v_lo > rb.b)
            continue;
        const double m = check_elem1(rng.uniform(v_lo, rb.b), q, T);
        ++n1;
        f1 += m < 0.0;
        m1 = std::min(m1, m);
    }
    while (n2 < 100000) {
        const double C = rng.uniform(0.01, 3.5);
        const double A = rng.uniform(4.0 * std::pow(C, 4) + 1.0, 700.0);
        const double V = std::exp(rng.uniform(C * (1.0 + 1e-9) + 1e-9, A + C * std::log(A) + 3.0));
        const double m = check_elem2(A, C, V);
        ++n2;
        f2 += m < 0.0;
        m2 = std::min(m2, m);
    }
    return {f1 == 0 && f2 == 0, fmt("elem1 failures %.0f (min margin %.4g); ", static_cast<double>(f1), m1) +
                                    fmt("elem2 failures %.0f (min margin %.4g)", static_cast<double>(f2), m2)};
}

Outcome perron()
{
    const unsigned threads = default_thread_count();
    int bad = 0, total = 0;
    double worst = 0.0;
    for (std::int64_t x : {500, 1000, 2000})
        for (std::int64_t q : {1, 3, 4, 5})
            for (const auto& p : perron_check_all(x, q, 5.0, threads)) {
                ++total;
                bad += !p.passed;
                worst = std::max(worst, std::abs(p.assembled - static_cast<double>(p.sieve_value)) / p.bound);
            }
    return {bad == 0, std::to_string(bad) + " of " + std::to_string(total) +
                          fmt(" residues fail; max |assembled - sieve| / (5 log(x/d)) = %.3g", worst)};
}

Outcome extreme_v()
{
    int bad = 0, total = 0;
    for (const char* label : {"1:", "3:1", "4:1"}) {
        const auto chi = character_from_label(label);
        const auto ds = find_dataset(MERTENS_AP_TEST_DATA_DIR, label);
        for (double g : ds.ordinates) {
            if (g + 1.0 > ds.gamma_max)
                continue;
            const double T = std::exp2(std::floor(std::log2(g)));
            const auto V = static_cast<std::int64_t>(std::ceil(range_bounds(T, chi.modulus()).b));
            for (double delta : {1.0, 0.5}) {
                ++total;
                bad += !classify_typical(ds, chi, g, T, V, delta).typical();
            }
        }
    }
    return {bad == 0 && total > 0, std::to_string(bad) + " of " + std::to_string(total) +
                                       " (ordinate, delta) pairs atypical at V = ceil(b)"};
}

Outcome envelope()
{
    const auto rows = standard_comparison_table(0.1, default_thread_count());
    int bad = 0;
    for (const auto& r : rows)
        bad += !(r.within && std::abs(static_cast<double>(r.value)) <= r.trivial + 1.0);
    return {bad == 0, std::to_string(bad) + " of " + std::to_string(rows.size()) + " rows outside the bounds"};
}

}  // namespace

int main(int argc, char** argv)
{
    const std::vector<Criterion> all{
        {1, "sieve oracle equivalence", 10, sieve_oracle},
        {2, "progression partition", 30, partition},
        {3, "reduction identity", 60, reduction},
        {4, "character orthogonality", 10, orthogonality},
        {5, "Selberg properties", 60, selberg},
        {6, "explicit formula", 60, explicit_formula},
        {7, "elementary inequalities", 30, inequalities},
        {8, "Perron consistency", 300, perron},
        {9, "typicality at V = ceil(b)", 60, extreme_v},
        {10, "envelope sanity", 30, envelope},
    };
    std::set<int> only;
    for (int i = 1; i < argc; ++i)
        only.insert(std::stoi(argv[i]));

    int failures = 0;
    for (const auto& c : all) {
        if (!only.empty() && !only.count(c.id))
            continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome out;
        try {
            out = c.run();
        } catch (const std::exception& e) {
            out = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        const bool in_time = secs < c.budget_s;
        const bool ok = out.ok && in_time;
        failures += !ok;
        std::printf("criterion %d (%s): %s  [%.2f s of %.0f s] %s%s\n", c.id, c.name, ok ? "PASS" : "FAIL", secs,
                    c.budget_s, out.detail.c_str(), in_time ? "" : " (over time budget)");
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
