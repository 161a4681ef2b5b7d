#include "mertens_ap/arith.hpp"

#include <cmath>
#include <numeric>
#include <tuple>

#include "mertens_ap/error.hpp"

namespace mertens_ap {

std::int64_t checked_add(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out))
        throw DomainError("64-bit overflow in addition");
    return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b)
{
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out))
        throw DomainError("64-bit overflow in multiplication");
    return out;
}

std::int64_t gcd(std::int64_t a, std::int64_t b)
{
    return std::gcd(a, b);
}

std::int64_t lcm(std::int64_t a, std::int64_t b)
{
    if (a == 0 || b == 0)
        return 0;
    return checked_mul(a / gcd(a, b), b);
}

std::int64_t mod_floor(std::int64_t a, std::int64_t q)
{
    if (q < 1)
        throw DomainError("modulus must be >= 1");
    std::int64_t r = a % q;
    return r < 0 ? r + q : r;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod)
{
    if (mod == 1)
        return 0;
    __extension__ using u128 = unsigned __int128;
    u128 result = 1;
    u128 b = static_cast<u128>(mod_floor(base, mod));
    while (exp > 0) {
        if (exp & 1)
            result = result * b % static_cast<u128>(mod);
        b = b * b % static_cast<u128>(mod);
        exp >>= 1;
    }
    return static_cast<std::int64_t>(result);
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t mod)
{
    std::int64_t g = mod, x = 0, x1 = 1, r = mod_floor(a, mod);
    while (r != 0) {
        std::int64_t t = g / r;
        std::tie(g, r) = std::make_pair(r, g - t * r);
        std::tie(x, x1) = std::make_pair(x1, x - t * x1);
    }
    if (g != 1)
        throw DomainError("element is not invertible");
    return mod_floor(x, mod);
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    if (n < 1)
        throw DomainError("factorize: n must be >= 1");
    std::vector<std::pair<std::int64_t, int>> out;
    for (std::int64_t p = 2; p <= n / p; p += (p == 2 ? 1 : 2)) {
        if (n % p != 0)
            continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::int64_t euler_phi(std::int64_t n)
{
    std::int64_t phi = n;
    for (auto [p, e] : factorize(n))
        phi = phi / p * (p - 1);
    return phi;
}

int moebius(std::int64_t n)
{
    int mu = 1;
    for (auto [p, e] : factorize(n)) {
        if (e > 1)
            return 0;
        mu = -mu;
    }
    return mu;
}

std::int64_t isqrt(std::int64_t n)
{
    if (n < 0)
        throw DomainError("isqrt of negative number");
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r)
        --r;
    while ((r + 1) <= n / (r + 1))
        ++r;
    return r;
}

}  // namespace mertens_ap
