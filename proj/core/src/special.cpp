#include "mertens_ap/special.hpp"

#include <cmath>
#include <numbers>

#include "mertens_ap/error.hpp"

namespace mertens_ap {

namespace {

constexpr double kPi = std::numbers::pi;

constexpr double kBernoulli[] = {
    1.0,
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
};

bool at_pole(cplx z)
{
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

}  // namespace

double bernoulli_even(int k)
{
    if (k < 0 || k > 10)
        throw DomainError("bernoulli_even: index out of table");
    return kBernoulli[k];
}

cplx digamma(cplx z)
{
    if (at_pole(z))
        throw DomainError("digamma pole at nonpositive integer");
    if (z.real() < 0.5)
        return digamma(1.0 - z) - kPi / std::tan(kPi * z);
    cplx shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift -= 1.0 / z;
        z += 1.0;
    }
    const cplx inv2 = 1.0 / (z * z);
    cplx series = 0.0;
    cplx pw = inv2;
    for (int k = 1; k <= 8; ++k) {
        series += kBernoulli[k] / (2.0 * k) * pw;
        pw *= inv2;
    }
    return shift + std::log(z) - 0.5 / z - series;
}

cplx trigamma(cplx z)
{
    if (at_pole(z))
        throw DomainError("trigamma pole at nonpositive integer");
    if (z.real() < 0.5) {
        cplx s = std::sin(kPi * z);
        return kPi * kPi / (s * s) - trigamma(1.0 - z);
    }
    cplx shift = 0.0;
    while (std::abs(z) < 10.0) {
        shift += 1.0 / (z * z);
        z += 1.0;
    }
    const cplx inv = 1.0 / z;
    const cplx inv2 = inv * inv;
    cplx series = 0.0;
    cplx pw = inv2 * inv;
    for (int k = 1; k <= 8; ++k) {
        series += kBernoulli[k] * pw;
        pw *= inv2;
    }
    return shift + inv + 0.5 * inv2 + series;
}

cplx exprel(cplx x)
{
    if (std::abs(x) > 1e-3)
        return (std::exp(x) - 1.0) / x;
    // Taylor series; five terms reach double precision for |x| <= 1e-3.
    return 1.0 + x / 2.0 * (1.0 + x / 3.0 * (1.0 + x / 4.0 * (1.0 + x / 5.0 * (1.0 + x / 6.0))));
}

cplx sinc_pi(cplx z)
{
    if (std::abs(z) < 1e-4) {
        cplx w = kPi * z;
        cplx w2 = w * w;
        return 1.0 - w2 / 6.0 + w2 * w2 / 120.0;
    }
    return std::sin(kPi * z) / (kPi * z);
}

}  // namespace mertens_ap
