#include "mertens_ap/sieve.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "mertens_ap/arith.hpp"
#include "mertens_ap/error.hpp"

namespace mertens_ap {

namespace {

std::mutex g_prime_mutex;
std::vector<std::int64_t> g_primes;
std::int64_t g_prime_limit = 1;

void extend_prime_cache(std::int64_t n)
{
    if (n <= g_prime_limit)
        return;
    std::int64_t limit = std::max<std::int64_t>(n, 2 * g_prime_limit);
    std::vector<bool> composite(static_cast<std::size_t>(limit + 1), false);
    g_primes.clear();
    for (std::int64_t i = 2; i <= limit; ++i) {
        if (composite[static_cast<std::size_t>(i)])
            continue;
        g_primes.push_back(i);
        for (std::int64_t j = i * i; j <= limit; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    g_prime_limit = limit;
}

ProgressionSum decompose(std::int64_t x, std::int64_t q, std::int64_t a)
{
    if (x < 1)
        throw DomainError("x must be >= 1");
    if (q < 1)
        throw DomainError("q must be >= 1");
    ProgressionSum ps;
    ps.x = x;
    ps.q = q;
    ps.a = mod_floor(a, q);
    ps.d = gcd(ps.a, q);  // gcd(0,q) = q
    ps.b = ps.a / ps.d;
    ps.r = q / ps.d;
    return ps;
}

}  // namespace

std::vector<std::int64_t> primes_up_to(std::int64_t n)
{
    std::lock_guard lock(g_prime_mutex);
    extend_prime_cache(n);
    auto end = std::upper_bound(g_primes.begin(), g_primes.end(), n);
    return {g_primes.begin(), end};
}

SieveSegment sieve_segment(std::int64_t lo, std::int64_t hi, bool with_lambda, std::int64_t cap)
{
    if (lo < 1)
        throw DomainError("sieve_segment: lo must be >= 1");
    if (hi < lo)
        throw DomainError("sieve_segment: hi must be >= lo");
    if (hi - lo + 1 > cap)
        throw SizeError("sieve_segment: range of " + std::to_string(hi - lo + 1) +
                        " exceeds segment cap " + std::to_string(cap));

    const auto len = static_cast<std::size_t>(hi - lo + 1);
    SieveSegment seg;
    seg.lo = lo;
    seg.hi = hi;
    seg.mu.assign(len, 1);
    if (with_lambda)
        seg.lambda.assign(len, 0.0);
    std::vector<std::int64_t> prod(len, 1);

    for (std::int64_t p : primes_up_to(isqrt(hi))) {
        const double logp = std::log(static_cast<double>(p));
        std::int64_t first = (lo + p - 1) / p * p;
        for (std::int64_t m = first; m <= hi; m += p) {
            auto i = static_cast<std::size_t>(m - lo);
            seg.mu[i] = static_cast<std::int8_t>(-seg.mu[i]);
            prod[i] *= p;
        }
        const std::int64_t p2 = p * p;
        for (std::int64_t m = (lo + p2 - 1) / p2 * p2; m <= hi; m += p2)
            seg.mu[static_cast<std::size_t>(m - lo)] = 0;
        if (with_lambda) {
            for (std::int64_t pk = p; pk <= hi; pk = (pk > hi / p) ? hi + 1 : pk * p)
                if (pk >= lo)
                    seg.lambda[static_cast<std::size_t>(pk - lo)] = logp;
        }
    }

    for (std::size_t i = 0; i < len; ++i) {
        const std::int64_t n = lo + static_cast<std::int64_t>(i);
        // At most one prime factor above sqrt(hi) remains.
        if (prod[i] < n) {
            seg.mu[i] = static_cast<std::int8_t>(-seg.mu[i]);
            if (with_lambda && prod[i] == 1)
                seg.lambda[i] = std::log(static_cast<double>(n));
        }
    }
    return seg;
}

std::int64_t mertens(std::int64_t x, std::int64_t cap)
{
    if (x < 1)
        throw DomainError("mertens: x must be >= 1");
    std::int64_t total = 0;
    for (std::int64_t lo = 1; lo <= x;) {
        std::int64_t hi = std::min(x, lo + cap - 1);
        auto seg = sieve_segment(lo, hi, false, cap);
        for (auto m : seg.mu)
            total += m;
        if (hi == x)
            break;
        lo = hi + 1;
    }
    return total;
}

ProgressionSum mertens_ap(std::int64_t x, std::int64_t q, std::int64_t a, std::int64_t cap)
{
    ProgressionSum ps = decompose(x, q, a);
    std::int64_t start = ps.a == 0 ? q : ps.a;
    for (std::int64_t lo = 1; lo <= x;) {
        std::int64_t hi = std::min(x, lo + cap - 1);
        auto seg = sieve_segment(lo, hi, false, cap);
        std::int64_t n = start;
        if (n < lo)
            n += (lo - n + q - 1) / q * q;
        for (; n <= hi; n = checked_add(n, q))
            ps.value += seg.mu_at(n);
        if (hi == x)
            break;
        lo = hi + 1;
    }
    return ps;
}

ProgressionSum mertens_ap(const SieveSegment& table, std::int64_t x, std::int64_t q, std::int64_t a)
{
    if (table.lo != 1 || table.hi < x)
        throw DomainError("mertens_ap: table must cover [1, x]");
    ProgressionSum ps = decompose(x, q, a);
    for (std::int64_t n = ps.a == 0 ? q : ps.a; n <= x; n += q)
        ps.value += table.mu_at(n);
    return ps;
}

ReductionCheck verify_reduction_identity(std::int64_t x, std::int64_t q, std::int64_t a, std::int64_t cap)
{
    ReductionCheck out;
    out.lhs = mertens_ap(x, q, a, cap);
    const auto& ps = out.lhs;
    const int mu_d = moebius(ps.d);
    if (mu_d != 0) {
        const std::int64_t y = x / ps.d;
        std::int64_t sum = 0;
        if (y >= 1) {
            for (std::int64_t lo = 1; lo <= y;) {
                std::int64_t hi = std::min(y, lo + cap - 1);
                auto seg = sieve_segment(lo, hi, false, cap);
                std::int64_t m = ps.b == 0 ? ps.r : ps.b;
                if (m < lo)
                    m += (lo - m + ps.r - 1) / ps.r * ps.r;
                for (; m <= hi; m += ps.r)
                    if (gcd(ps.d, m) == 1)
                        sum += seg.mu_at(m);
                if (hi == y)
                    break;
                lo = hi + 1;
            }
        }
        out.rhs = mu_d * sum;
    }
    out.holds = out.rhs == out.lhs.value;
    return out;
}

}  // namespace mertens_ap
