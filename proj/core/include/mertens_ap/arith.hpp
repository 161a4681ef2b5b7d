#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace mertens_ap {

// Overflow-checked 64-bit arithmetic; throws DomainError on overflow.
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

std::int64_t gcd(std::int64_t a, std::int64_t b);
std::int64_t lcm(std::int64_t a, std::int64_t b);

// Least nonnegative residue of a mod q (q >= 1).
std::int64_t mod_floor(std::int64_t a, std::int64_t q);

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t inverse_mod(std::int64_t a, std::int64_t mod);

// Prime factorization by trial division, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

std::int64_t euler_phi(std::int64_t n);
int moebius(std::int64_t n);

// floor(sqrt(n)) without floating point surprises.
std::int64_t isqrt(std::int64_t n);

}  // namespace mertens_ap
