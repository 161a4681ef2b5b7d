#include "mertens_ap/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "mertens_ap/error.hpp"
#include "mertens_ap/quadrature.hpp"
#include "mertens_ap/sieve.hpp"
#include "mertens_ap/special.hpp"

namespace mertens_ap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kGammaWindow = 2000.0;
constexpr double kMaxPrimeRange = 2e8;

// Majorant of |F(u)| for |u| > h, with 1% slack over the analytic tail bounds.
double decay_majorant(const SelbergPair& p, double v)
{
    const double w = v - p.h;
    if (w <= 0.0)
        return INFINITY;
    const double d = p.delta;
    return 1.01 * (1.0 / (kPi * kPi * d * d * w * w) + 1.0 / (3.0 * kPi * kPi * d * d * d * w * w * w));
}

// Upper bound for Σ g(|γ - t|) over zeros with γ > G (shift = -t) or γ < -G (shift = +t).
double zero_tail(const SelbergPair& p, std::int64_t q, double G, double shift)
{
    const double qd = static_cast<double>(q);
    auto density = [&](double u) { return std::log(qd * u / (2.0 * kPi)) / (2.0 * kPi) + 0.4 / u; };
    auto integrand = [&](double u) { return decay_majorant(p, u + shift) * std::max(density(u), 0.0); };
    const double R = 1e7;
    double acc = 0.0;
    for (double a = G; a < R; a *= 2.0) {
        const double b = std::min(2.0 * a, R);
        acc += integrate_adaptive(integrand, a, b, 1e-12).value;
    }
    acc += 5.0 * 1.01 * (std::log(qd * R) + 1.0) / (kPi * kPi * p.delta * p.delta * R);
    const double E = 0.4 * std::log(qd * G) + 7.0;
    return acc + 2.0 * E * decay_majorant(p, G + shift);
}

}  // namespace

ExplicitFormulaReport verify_explicit_formula(const DirichletCharacter& chi, const ZeroDataset& zeros, double t,
                                              const SelbergPair& pair, Sign sign)
{
    pair.validate();
    if (!chi.is_primitive())
        throw DomainError("explicit formula needs a primitive character");
    if (zeros.label != chi.label_string())
        throw ValidationError("zero dataset " + zeros.label + " does not belong to " + chi.label_string());
    if (!(t >= 10.0))
        throw DomainError("explicit formula check needs t >= 10");
    if (zeros.gamma_max < t + 50.0)
        throw CoverageError("explicit formula at t=" + std::to_string(t) + " needs zeros up to gamma_max >= " +
                                std::to_string(t + 50.0),
                            t + 50.0);
    const double nmax_real = std::exp(2.0 * kPi * pair.delta);
    if (nmax_real > kMaxPrimeRange)
        throw SizeError("prime sum up to e^{2 pi delta} = " + std::to_string(nmax_real) + " is too long");

    ExplicitFormulaReport rep;
    rep.t = t;
    rep.pair = pair;
    rep.sign = sign;
    rep.label = chi.label_string();
    rep.kappa = chi.kappa();
    const std::int64_t q = chi.modulus();
    const double sf = sign_factor(sign);

    for (double g : zeros.signed_ordinates()) {
        rep.lhs += evaluate_F(pair, sign, g - t);
        ++rep.zeros_used;
    }

    const double f_hat_0 = 2.0 * pair.h + sf / pair.delta;
    rep.conductor_term = f_hat_0 * std::log(static_cast<double>(q) / kPi) / (2.0 * kPi);

    const cplx half_i(0.0, 0.5);
    if (q == 1)
        rep.pole_term = 2.0 * evaluate_F(pair, sign, half_i - t).real();
    rep.single_pole_term = (1 - rep.kappa) * evaluate_F(pair, sign, -half_i - t).real();

    const double kap = static_cast<double>(rep.kappa);
    auto gamma_integrand = [&](double u) {
        return evaluate_F(pair, sign, u - t) * digamma(cplx(0.5 + kap, u) / 2.0).real();
    };
    auto gq = integrate_panels(gamma_integrand, t - kGammaWindow, t + kGammaWindow, 1.0 / (2.0 * pair.delta), 1e-11,
                               {t - pair.h, t + pair.h});
    rep.gamma_term = gq.value / (2.0 * kPi);
    rep.quadrature_error = gq.error / (2.0 * kPi);
    {
        const double w = kGammaWindow - pair.h;
        rep.gamma_tail_bound = 1.05 * 1.01 / (kPi * kPi * kPi * pair.delta * pair.delta) *
                               (std::log(w) + 3.0 + pair.h / w) / w;
    }

    const auto nmax = static_cast<std::int64_t>(std::floor(nmax_real));
    double prime_sum = 0.0;
    for (std::int64_t lo = 2; lo <= nmax;) {
        const std::int64_t hi = std::min(nmax, lo + kDefaultSegmentCap - 1);
        const auto seg = sieve_segment(lo, hi, true);
        for (std::int64_t n = lo; n <= hi; ++n) {
            const double lam = seg.lambda_at(n);
            if (lam == 0.0)
                continue;
            const std::int64_t e = chi.exponent(n);
            if (e < 0)
                continue;
            const double ln = std::log(static_cast<double>(n));
            const double fh = fourier_F_closed(pair, sign, ln / (2.0 * kPi));
            if (fh == 0.0)
                continue;
            const double phase = 2.0 * kPi * static_cast<double>(e) / static_cast<double>(chi.order()) - t * ln;
            prime_sum += lam / std::sqrt(static_cast<double>(n)) * fh * std::cos(phase);
            ++rep.prime_terms;
        }
        if (hi == nmax)
            break;
        lo = hi + 1;
    }
    rep.prime_term = -prime_sum / kPi;

    rep.rhs = rep.conductor_term + rep.pole_term + rep.gamma_term + rep.prime_term;

    rep.zero_tail_bound = zero_tail(pair, q, zeros.gamma_max, -t) + zero_tail(pair, q, zeros.gamma_max, t);
    rep.truncation_error_estimate =
        rep.zero_tail_bound + rep.gamma_tail_bound + rep.quadrature_error + 1e-10 * (1.0 + rep.prime_terms * 1e-6);
    return rep;
}

}  // namespace mertens_ap
