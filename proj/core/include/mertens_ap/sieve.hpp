#pragma once

#include <cstdint>
#include <vector>

namespace mertens_ap {

inline constexpr std::int64_t kDefaultSegmentCap = std::int64_t{1} << 22;

struct SieveSegment {
    std::int64_t lo = 1;
    std::int64_t hi = 0;
    std::vector<std::int8_t> mu;
    std::vector<double> lambda;  // empty when sieved without Λ

    std::int64_t size() const { return hi - lo + 1; }
    int mu_at(std::int64_t n) const { return mu[static_cast<std::size_t>(n - lo)]; }
    double lambda_at(std::int64_t n) const { return lambda[static_cast<std::size_t>(n - lo)]; }
};

struct ProgressionSum {
    std::int64_t x = 0;
    std::int64_t q = 1;
    std::int64_t a = 0;
    std::int64_t d = 1;
    std::int64_t b = 0;
    std::int64_t r = 1;
    std::int64_t value = 0;
};

struct ReductionCheck {
    ProgressionSum lhs;
    std::int64_t rhs = 0;
    bool holds = false;
};

// Primes up to n, ascending. Backed by a shared cache that only grows.
std::vector<std::int64_t> primes_up_to(std::int64_t n);

SieveSegment sieve_segment(std::int64_t lo, std::int64_t hi,
                           bool with_lambda = true,
                           std::int64_t cap = kDefaultSegmentCap);

std::int64_t mertens(std::int64_t x, std::int64_t cap = kDefaultSegmentCap);

ProgressionSum mertens_ap(std::int64_t x, std::int64_t q, std::int64_t a,
                          std::int64_t cap = kDefaultSegmentCap);

// Same sum read from a table that starts at 1 and covers x.
ProgressionSum mertens_ap(const SieveSegment& table, std::int64_t x,
                          std::int64_t q, std::int64_t a);

ReductionCheck verify_reduction_identity(std::int64_t x, std::int64_t q, std::int64_t a,
                                         std::int64_t cap = kDefaultSegmentCap);

}  // namespace mertens_ap
