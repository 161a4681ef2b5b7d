#include "mertens_ap/selberg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mertens_ap/error.hpp"
#include "mertens_ap/quadrature.hpp"

namespace mertens_ap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRoundoff = 1e-12;

// Bound on |G(u) - χ(u)| beyond u > h, where G is the H-part of F.
double h_tail_integral(const SelbergPair& p, double w)
{
    return 1.0 / (3.0 * kPi * kPi * std::pow(p.delta, 3) * (w - p.h) * (w - p.h));
}

double h_part(const SelbergPair& p, double u)
{
    return 0.5 * (beurling_H(p.delta * (u + p.h)).real() + beurling_H(p.delta * (p.h - u)).real());
}

double k_part(const SelbergPair& p, double u)
{
    return 0.5 * (kernel_K(p.delta * (u + p.h)).real() + kernel_K(p.delta * (p.h - u)).real());
}

// Ĵ(t) = πt(1-|t|)cot(πt) + |t| on |t| < 1.
double vaaler_J_hat(double t)
{
    const double a = std::abs(t);
    if (a >= 1.0)
        return 0.0;
    if (a < 1e-8)
        return 1.0 - kPi * kPi * a * a / 3.0;
    return kPi * a * (1.0 - a) / std::tan(kPi * a) + a;
}

}  // namespace

void SelbergPair::validate() const
{
    if (!(h > 0.0) || !std::isfinite(h))
        throw DomainError("Selberg pair needs h > 0");
    if (!(delta > 0.0) || !std::isfinite(delta))
        throw DomainError("Selberg pair needs delta > 0");
    if (n_h < 1)
        throw DomainError("Selberg pair needs a positive H truncation");
}

cplx kernel_K(cplx z)
{
    cplx s = sinc_pi(z);
    return s * s;
}

cplx beurling_H(cplx z)
{
    if (z.real() < 0.0)
        return -beurling_H(-z);
    const cplx s = std::sin(kPi * z) / kPi;
    return 1.0 - kernel_K(z) * (1.0 - 2.0 * z) - 2.0 * s * s * trigamma(1.0 + z);
}

cplx beurling_H_series(cplx z, std::int64_t n_terms)
{
    if (z.real() < 0.0)
        return -beurling_H_series(-z, n_terms);
    cplx acc = 2.0 * z * kernel_K(z);
    for (std::int64_t n = n_terms; n >= 1; --n) {
        const auto dn = static_cast<double>(n);
        acc += kernel_K(z - dn) - kernel_K(z + dn);
    }
    // Σ_{n>N} 1/(z-n)^2 - 1/(z+n)^2 by the midpoint rule.
    const double m = static_cast<double>(n_terms) + 0.5;
    const cplx s = std::sin(kPi * z) / kPi;
    acc += s * s * (1.0 / (m - z) - 1.0 / (m + z));
    return acc;
}

double beurling_H_series_tail_bound(cplx z, std::int64_t n_terms)
{
    const cplx s = std::sin(kPi * z) / kPi;
    const double m = static_cast<double>(n_terms) + 0.5 - std::abs(z);
    if (m <= 1.0)
        return INFINITY;
    // Midpoint error of a convex summand is at most the second difference.
    return std::norm(s) * 2.0 / (m * m * m);
}

cplx evaluate_F(const SelbergPair& p, Sign sign, cplx z)
{
    const double sf = sign_factor(sign);
    const cplx a = p.delta * (z + p.h);
    const cplx b = p.delta * (p.h - z);
    return 0.5 * (beurling_H(a) + sf * kernel_K(a) + beurling_H(b) + sf * kernel_K(b));
}

double evaluate_F(const SelbergPair& p, Sign sign, double u)
{
    return h_part(p, u) + sign_factor(sign) * k_part(p, u);
}

double indicator(const SelbergPair& p, double u)
{
    return std::abs(u) <= p.h ? 1.0 : 0.0;
}

FourierValue fourier_F(const SelbergPair& p, Sign sign, double x)
{
    p.validate();
    const double ax = std::abs(x);
    const double tail = 1e-9;
    const double w = p.h + std::sqrt(1.0 / (3.0 * kPi * kPi * std::pow(p.delta, 3) * tail));
    double width = 1.0 / (2.0 * p.delta);
    if (ax > 0.0)
        width = std::min(width, 1.0 / (4.0 * ax));
    const double omega = 2.0 * kPi * ax;
    auto integrand = [&](double u) { return (h_part(p, u) - indicator(p, u)) * std::cos(omega * u); };
    auto quad = integrate_panels(integrand, 0.0, w, width, 1e-12, {p.h});

    const double ind_hat = ax == 0.0 ? 2.0 * p.h : std::sin(2.0 * kPi * p.h * ax) / (kPi * ax);
    const double k_hat = ax >= p.delta ? 0.0 : (1.0 - ax / p.delta) / p.delta * std::cos(2.0 * kPi * p.h * ax);
    FourierValue out;
    out.value = ind_hat + 2.0 * quad.value + sign_factor(sign) * k_hat;
    out.error = 2.0 * quad.error + tail;
    if (!std::isfinite(out.value))
        throw ToleranceError("fourier_F: quadrature produced a non-finite value");
    if (out.error > 1e-6)
        throw ToleranceError("fourier_F: quadrature error " + std::to_string(out.error) + " above 1e-6");
    return out;
}

double fourier_F_closed(const SelbergPair& p, Sign sign, double x)
{
    const double ax = std::abs(x);
    if (ax >= p.delta)
        return 0.0;
    const double ind_hat = ax == 0.0 ? 2.0 * p.h : std::sin(2.0 * kPi * p.h * ax) / (kPi * ax);
    return vaaler_J_hat(ax / p.delta) * ind_hat +
           sign_factor(sign) * (1.0 - ax / p.delta) / p.delta * std::cos(2.0 * kPi * p.h * ax);
}

FourierValue l1_mass(const SelbergPair& p, Sign sign)
{
    p.validate();
    const double w = p.h + 200.0;
    const double width = 1.0 / (2.0 * p.delta);
    auto gap = [&](double u) { return std::abs(evaluate_F(p, sign, u) - indicator(p, u)); };
    auto kp = [&](double u) { return k_part(p, u); };
    auto main = integrate_panels(gap, 0.0, w, width, 1e-13, {p.h});
    auto kq = integrate_panels(kp, 0.0, w, width, 1e-13, {p.h});
    // Outside [-W,W]: |F - χ| <= |G - χ| + K-part, and the K-part has total mass 1/Δ.
    FourierValue out;
    out.value = 2.0 * main.value + (1.0 / p.delta - 2.0 * kq.value);
    out.error = 2.0 * (main.error + kq.error) + h_tail_integral(p, w);
    return out;
}

std::int64_t sandwich_violations(const SelbergPair& p, const std::vector<double>& samples)
{
    std::int64_t bad = 0;
    for (double u : samples) {
        const double chi = indicator(p, u);
        if (evaluate_F(p, Sign::plus, u) < chi - kRoundoff)
            ++bad;
        if (evaluate_F(p, Sign::minus, u) > chi + kRoundoff)
            ++bad;
    }
    return bad;
}

double fit_decay_constant(const SelbergPair& p, Sign sign, const std::vector<cplx>& samples)
{
    double best = 0.0;
    for (cplx z : samples) {
        const double r = std::abs(z);
        if (r < 2.0 * p.h)
            continue;
        const double scale = p.delta * r;
        const double v = std::abs(evaluate_F(p, sign, z)) * scale * scale *
                         std::exp(-2.0 * kPi * p.delta * std::abs(z.imag()));
        best = std::max(best, v);
    }
    return best;
}

}  // namespace mertens_ap
