#include "mertens_ap/analytic.hpp"

#include <cmath>
#include <numbers>

#include "mertens_ap/arith.hpp"
#include "mertens_ap/error.hpp"

namespace mertens_ap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr std::int64_t kMaxDirectTerms = 50'000'000;

double log_pochhammer_abs(cplx s, int k)
{
    double acc = 0.0;
    for (int j = 0; j < k; ++j)
        acc += std::log(std::abs(s + static_cast<double>(j)));
    return acc;
}

// Σ_{j=1..M} B_{2j}/(2j)! (s)_{2j-1} w^{-s-2j+1} + w^{-s}/2.
cplx em_correction(cplx s, double w, int m)
{
    const cplx ws = std::exp(-s * std::log(w));
    cplx acc = 0.5;
    cplx poch = s;
    double wp = 1.0 / w;
    double fact = 2.0;  // (2j)!
    for (int j = 1; j <= m; ++j) {
        acc += bernoulli_even(j) / fact * poch * wp;
        const double a = 2.0 * j - 1.0;
        poch *= (s + a) * (s + a + 1.0);
        wp /= w * w;
        fact *= (2.0 * j + 1.0) * (2.0 * j + 2.0);
    }
    return acc * ws;
}

// w^{1-s}/(s-1), or that minus 1/(s-1) when the constant cancels across residues.
cplx em_leading(cplx s, double w, bool principal)
{
    const double lw = std::log(w);
    if (principal)
        return std::exp((1.0 - s) * lw) / (s - 1.0);
    return -lw * exprel(-(s - 1.0) * lw);
}

// log of 4|(s)_{2M+1}| / ((2π)^{2M+1} (σ+2M)), the w-free part of the remainder bound.
double log_remainder_coeff(cplx s, int m)
{
    return std::log(4.0) + log_pochhammer_abs(s, 2 * m + 1) - (2 * m + 1) * std::log(kTwoPi) -
           std::log(s.real() + 2.0 * m);
}

// Smallest N with weight·exp(coeff)/N^{σ+2M} <= target.
std::int64_t em_terms(cplx s, int m, double weight, double target)
{
    const double expo = s.real() + 2.0 * m;
    const double logn = (log_remainder_coeff(s, m) + std::log(weight) - std::log(target)) / expo;
    if (logn > std::log(static_cast<double>(kMaxDirectTerms)))
        return kMaxDirectTerms + 1;
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(std::exp(logn))));
}

LValue hurwitz_em(cplx s, const DirichletCharacter& chi, double tol, int m)
{
    const std::int64_t q = chi.modulus();
    const double sigma = s.real();
    if (sigma + 2.0 * m <= 0.0)
        throw DomainError("Euler-Maclaurin remainder needs Re(s) > " + std::to_string(-2 * m));
    if (chi.is_principal() && std::abs(s - 1.0) < 1e-8)
        throw DomainError("s is within 1e-8 of the pole at s=1");

    const double qd = static_cast<double>(q);
    const double weight = static_cast<double>(euler_phi(q)) * std::pow(qd, -sigma);
    const std::int64_t n = em_terms(s, m, weight, tol / 2.0);
    if (n > kMaxDirectTerms / q)
        throw ToleranceError("L evaluation would need more than " + std::to_string(kMaxDirectTerms) +
                             " direct terms at this s and tolerance");

    LValue out;
    out.terms = q * n;
    cplx direct = 0.0;
    double abs_sum = 0.0;
    for (std::int64_t k = 1; k <= q * n; ++k) {
        const cplx c = chi.value(k);
        if (c == 0.0)
            continue;
        const cplx term = c * std::exp(-s * std::log(static_cast<double>(k)));
        direct += term;
        abs_sum += std::abs(term);
    }
    const cplx q_pow = std::exp(-s * std::log(qd));
    cplx tail = 0.0;
    for (std::int64_t a = 1; a <= q; ++a) {
        const cplx c = chi.value(a);
        if (c == 0.0)
            continue;
        const double w = static_cast<double>(n) + static_cast<double>(a) / qd;
        tail += c * (em_leading(s, w, chi.is_principal()) + em_correction(s, w, m));
    }
    out.value = direct + q_pow * tail;
    const double remainder =
        weight * std::exp(log_remainder_coeff(s, m) - (sigma + 2.0 * m) * std::log(static_cast<double>(n)));
    out.error = remainder + 4e-16 * (abs_sum + std::abs(q_pow * tail));
    return out;
}

}  // namespace

LValue eval_L(const LValueRequest& req)
{
    if (!(req.tolerance >= 1e-12))
        throw DomainError("L tolerance must be >= 1e-12");
    if (req.method == LMethod::dirichlet_series) {
        if (!(req.s.real() > 1.0))
            throw DomainError("dirichlet_series method needs Re(s) > 1");
        // Lowest-order correction only, so the direct sum carries the work.
        return hurwitz_em(req.s, req.chi, req.tolerance, 1);
    }
    return hurwitz_em(req.s, req.chi, req.tolerance, 8);
}

cplx eval_l_d(cplx s, const DirichletCharacter& chi, std::int64_t d)
{
    if (d < 1)
        throw DomainError("l_d needs d >= 1");
    cplx acc = 1.0;
    for (auto [p, e] : factorize(d))
        acc *= 1.0 - chi.value(p) * std::exp(-s * std::log(static_cast<double>(p)));
    return acc;
}

double digamma_real_part(cplx s)
{
    return digamma(s).real();
}

LineLSeries::LineLSeries(std::vector<DirichletCharacter> chars, double sigma, double t_max, double tol)
    : chars_(std::move(chars)), sigma_(sigma), tol_(tol)
{
    if (chars_.empty())
        throw DomainError("LineLSeries needs at least one character");
    r_ = chars_.front().modulus();
    for (const auto& c : chars_)
        if (c.modulus() != r_)
            throw DomainError("LineLSeries characters must share a modulus");
    if (!(sigma > 0.5))
        throw DomainError("LineLSeries needs sigma > 1/2");
    const std::int64_t nmax = r_ * terms_for(std::abs(t_max));
    if (nmax > kMaxDirectTerms)
        throw ToleranceError("LineLSeries: too many direct terms");

    spf_.assign(static_cast<std::size_t>(nmax + 1), 0);
    for (std::int64_t i = 2; i <= nmax; ++i) {
        if (spf_[static_cast<std::size_t>(i)] != 0)
            continue;
        for (std::int64_t j = i; j <= nmax; j += i)
            if (spf_[static_cast<std::size_t>(j)] == 0)
                spf_[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(i);
    }
    log_n_.resize(static_cast<std::size_t>(nmax + 1), 0.0);
    pow_n_.resize(static_cast<std::size_t>(nmax + 1), 1.0);
    for (std::int64_t i = 2; i <= nmax; ++i) {
        log_n_[static_cast<std::size_t>(i)] = std::log(static_cast<double>(i));
        pow_n_[static_cast<std::size_t>(i)] = std::exp(-sigma * log_n_[static_cast<std::size_t>(i)]);
    }
    values_.resize(chars_.size() * static_cast<std::size_t>(r_));
    for (std::size_t k = 0; k < chars_.size(); ++k)
        for (std::int64_t a = 0; a < r_; ++a)
            values_[k * static_cast<std::size_t>(r_) + static_cast<std::size_t>(a)] = chars_[k].value(a);
}

std::int64_t LineLSeries::terms_for(double t) const
{
    const cplx s(sigma_, t);
    const double weight = static_cast<double>(euler_phi(r_)) * std::pow(static_cast<double>(r_), -sigma_);
    return em_terms(s, 8, weight, tol_ / 2.0);
}

double LineLSeries::evaluate(double t, std::vector<cplx>& out) const
{
    const cplx s(sigma_, t);
    const std::int64_t n = terms_for(t);
    const std::int64_t nmax = r_ * n;
    if (nmax + 1 > static_cast<std::int64_t>(spf_.size()))
        throw DomainError("LineLSeries evaluated beyond its t range");

    // n^{-s} built multiplicatively from prime values.
    thread_local std::vector<cplx> z;
    z.resize(static_cast<std::size_t>(nmax + 1));
    thread_local std::vector<cplx> residue_sum;
    residue_sum.assign(static_cast<std::size_t>(r_), 0.0);
    if (nmax >= 1) {
        z[1] = 1.0;
        residue_sum[static_cast<std::size_t>(1 % r_)] += 1.0;
    }
    for (std::int64_t k = 2; k <= nmax; ++k) {
        const auto i = static_cast<std::size_t>(k);
        const std::int64_t p = spf_[i];
        if (p == k)
            z[i] = std::polar(pow_n_[i], -t * log_n_[i]);
        else
            z[i] = z[static_cast<std::size_t>(p)] * z[static_cast<std::size_t>(k / p)];
        residue_sum[static_cast<std::size_t>(k % r_)] += z[i];
    }

    const double rd = static_cast<double>(r_);
    const cplx r_pow = std::exp(-s * std::log(rd));
    thread_local std::vector<cplx> corr, lead_p, lead_n;
    corr.resize(static_cast<std::size_t>(r_));
    lead_p.resize(static_cast<std::size_t>(r_));
    lead_n.resize(static_cast<std::size_t>(r_));
    for (std::int64_t a = 1; a <= r_; ++a) {
        const double w = static_cast<double>(n) + static_cast<double>(a) / rd;
        const auto i = static_cast<std::size_t>(a % r_);
        corr[i] = em_correction(s, w, 8);
        lead_p[i] = em_leading(s, w, true);
        lead_n[i] = em_leading(s, w, false);
    }
    out.resize(chars_.size());
    for (std::size_t k = 0; k < chars_.size(); ++k) {
        const bool principal = chars_[k].is_principal();
        cplx acc = 0.0;
        for (std::int64_t a = 0; a < r_; ++a) {
            const cplx c = values_[k * static_cast<std::size_t>(r_) + static_cast<std::size_t>(a)];
            if (c == 0.0)
                continue;
            const auto i = static_cast<std::size_t>(a);
            acc += c * (residue_sum[i] + r_pow * ((principal ? lead_p[i] : lead_n[i]) + corr[i]));
        }
        out[k] = acc;
    }
    const double weight = static_cast<double>(euler_phi(r_)) * std::pow(rd, -sigma_);
    return weight * std::exp(log_remainder_coeff(s, 8) - (sigma_ + 16.0) * std::log(static_cast<double>(n)));
}

}  // namespace mertens_ap
