#include "mertens_ap/perron.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include "mertens_ap/analytic.hpp"
#include "mertens_ap/arith.hpp"
#include "mertens_ap/error.hpp"
#include "mertens_ap/parallel.hpp"
#include "mertens_ap/quadrature.hpp"
#include "mertens_ap/sieve.hpp"

namespace mertens_ap {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLTolerance = 1e-9;
constexpr double kPanelTolerance = 1e-7;

struct VecQuad {
    std::vector<cplx> value;
    std::vector<double> error;
};

class PerronIntegrand {
public:
    PerronIntegrand(const std::vector<DirichletCharacter>& chars, double y, std::int64_t d)
        : chars_(chars), d_(d), log_y_(std::log(y)), c_(1.0 + 1.0 / std::log(y)),
          line_(chars, c_, std::floor(y), kLTolerance)
    {
    }

    // f_k(t) and a bound on its error from the truncated L evaluation.
    void operator()(double t, std::vector<cplx>& f, std::vector<double>& err) const
    {
        thread_local std::vector<cplx> l;
        const double lerr = line_.evaluate(t, l);
        const cplx s(c_, t);
        const cplx num = std::exp(s * log_y_) / s;
        f.resize(chars_.size());
        err.resize(chars_.size());
        for (std::size_t k = 0; k < chars_.size(); ++k) {
            const cplx den = l[k] * eval_l_d(s, chars_[k], d_);
            f[k] = num / den;
            err[k] = std::abs(f[k]) * lerr / std::max(std::abs(l[k]) - lerr, 1e-300);
        }
    }

    std::size_t size() const { return chars_.size(); }

private:
    const std::vector<DirichletCharacter>& chars_;
    std::int64_t d_;
    double log_y_;
    double c_;
    LineLSeries line_;
};

VecQuad gk15_vec(const PerronIntegrand& f, double a, double b)
{
    using namespace detail;
    const std::size_t m = f.size();
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    std::vector<cplx> fv, fw, kron(m, 0.0), gauss(m, 0.0);
    std::vector<double> ev, ew, lerr(m, 0.0);
    f(c, fv, ev);
    for (std::size_t k = 0; k < m; ++k) {
        kron[k] = kKronrodWeights[7] * fv[k];
        gauss[k] = kGaussWeights[3] * fv[k];
        lerr[k] = kKronrodWeights[7] * ev[k];
    }
    for (int i = 0; i < 7; ++i) {
        const double dx = r * kGkNodes[i];
        f(c - dx, fv, ev);
        f(c + dx, fw, ew);
        for (std::size_t k = 0; k < m; ++k) {
            const cplx s = fv[k] + fw[k];
            kron[k] += kKronrodWeights[i] * s;
            if (i % 2 == 1)
                gauss[k] += kGaussWeights[i / 2] * s;
            lerr[k] += kKronrodWeights[i] * (ev[k] + ew[k]);
        }
    }
    VecQuad out;
    out.value.resize(m);
    out.error.resize(m);
    for (std::size_t k = 0; k < m; ++k) {
        out.value[k] = kron[k] * r;
        out.error[k] = std::abs((kron[k] - gauss[k]) * r) + lerr[k] * r;
    }
    return out;
}

VecQuad adaptive_vec(const PerronIntegrand& f, double a, double b, double tol, int depth)
{
    VecQuad whole = gk15_vec(f, a, b);
    const double worst = *std::max_element(whole.error.begin(), whole.error.end());
    if (worst <= tol || depth == 0)
        return whole;
    const double m = 0.5 * (a + b);
    VecQuad left = adaptive_vec(f, a, m, 0.5 * tol, depth - 1);
    VecQuad right = adaptive_vec(f, m, b, 0.5 * tol, depth - 1);
    for (std::size_t k = 0; k < left.value.size(); ++k) {
        left.value[k] += right.value[k];
        left.error[k] += right.error[k];
    }
    return left;
}

std::vector<std::int64_t> conjugate_label(const DirichletCharacter& chi)
{
    std::vector<std::int64_t> out = chi.label();
    const auto& comps = chi.group().components;
    for (std::size_t j = 0; j < out.size(); ++j)
        out[j] = mod_floor(-out[j], comps[j].order);
    return out;
}

void assemble(PerronCheck& row, int mu_d, const std::vector<DirichletCharacter>& chars,
              const std::vector<PerronValue>& vals)
{
    cplx acc = 0.0;
    double err = 0.0;
    for (std::size_t k = 0; k < chars.size(); ++k) {
        acc += std::conj(chars[k].value(row.b)) * vals[k].value;
        err += vals[k].error;
    }
    const double scale = static_cast<double>(mu_d) / static_cast<double>(euler_phi(row.r));
    row.assembled = scale * acc.real();
    row.imag_residue = scale * acc.imag();
    row.quad_error = std::abs(scale) * err;
}

PerronCheck start_row(const ProgressionSum& ps, double constant)
{
    PerronCheck row;
    row.x = ps.x;
    row.q = ps.q;
    row.a = ps.a;
    row.d = ps.d;
    row.b = ps.b;
    row.r = ps.r;
    row.sieve_value = ps.value;
    row.bound = constant * std::log(static_cast<double>(ps.x) / static_cast<double>(ps.d));
    return row;
}

void check_inputs(std::int64_t x, std::int64_t q)
{
    if (x < 10)
        throw DomainError("perron_check needs x >= 10");
    if (q < 1)
        throw DomainError("perron_check needs q >= 1");
    if (q > 500)
        throw SizeError("perron_check supports q <= 500");
}

}  // namespace

std::vector<PerronValue> perron_integrals(double x, const std::vector<DirichletCharacter>& chars, std::int64_t d,
                                          unsigned threads)
{
    if (chars.empty())
        return {};
    if (d < 1)
        throw DomainError("perron_integral needs d >= 1");
    const double y = x / static_cast<double>(d);
    if (!(y >= 2.0))
        throw DomainError("perron_integral needs x/d >= 2");

    // Close the family under conjugation: the integral over [-T,0] of χ is the
    // conjugate of the integral over [0,T] of conj χ.
    std::vector<DirichletCharacter> family = chars;
    std::map<std::vector<std::int64_t>, std::size_t> index;
    for (std::size_t k = 0; k < family.size(); ++k)
        index.emplace(family[k].label(), k);
    std::vector<std::size_t> conj(chars.size());
    for (std::size_t k = 0; k < chars.size(); ++k) {
        auto lab = conjugate_label(chars[k]);
        auto it = index.find(lab);
        if (it == index.end()) {
            family.emplace_back(unit_group(chars[k].modulus()), lab);
            it = index.emplace(lab, family.size() - 1).first;
        }
        conj[k] = it->second;
    }

    const PerronIntegrand integrand(family, y, d);
    const double T = std::floor(y);
    const double width = (2.0 * kPi / std::log(y)) / 8.0;
    const auto panels = static_cast<std::size_t>(std::ceil(T / width));
    auto parts = parallel_map(panels, threads, [&](std::size_t i) {
        const double a = T * static_cast<double>(i) / static_cast<double>(panels);
        const double b = T * static_cast<double>(i + 1) / static_cast<double>(panels);
        return adaptive_vec(integrand, a, b, kPanelTolerance, 8);
    });

    std::vector<cplx> half(family.size(), 0.0);
    std::vector<double> err(family.size(), 0.0);
    for (const auto& p : parts)
        for (std::size_t k = 0; k < family.size(); ++k) {
            half[k] += p.value[k];
            err[k] += p.error[k];
        }
    std::vector<PerronValue> out(chars.size());
    for (std::size_t k = 0; k < chars.size(); ++k) {
        out[k].value = (half[k] + std::conj(half[conj[k]])) / (2.0 * kPi);
        out[k].error = (err[k] + err[conj[k]]) / (2.0 * kPi);
    }
    return out;
}

PerronValue perron_integral(double x, const DirichletCharacter& chi, std::int64_t d, unsigned threads)
{
    return perron_integrals(x, {chi}, d, threads).front();
}

std::vector<PerronCheck> perron_check_all(std::int64_t x, std::int64_t q, double constant, unsigned threads)
{
    check_inputs(x, q);
    const auto table = sieve_segment(1, x, false);

    // Integrals depend on the residue only through d.
    std::map<std::int64_t, std::pair<std::vector<DirichletCharacter>, std::vector<PerronValue>>> by_d;
    std::vector<PerronCheck> rows;
    for (std::int64_t a = 0; a < q; ++a) {
        PerronCheck row = start_row(mertens_ap(table, x, q, a), constant);
        const int mu_d = moebius(row.d);
        if (mu_d != 0 && static_cast<double>(x) / static_cast<double>(row.d) >= 2.0) {
            auto it = by_d.find(row.d);
            if (it == by_d.end()) {
                auto chars = character_group(row.r);
                auto vals = perron_integrals(static_cast<double>(x), chars, row.d, threads);
                it = by_d.emplace(row.d, std::make_pair(std::move(chars), std::move(vals))).first;
            }
            assemble(row, mu_d, it->second.first, it->second.second);
        }
        row.passed = std::abs(row.assembled - static_cast<double>(row.sieve_value)) <= row.bound;
        rows.push_back(row);
    }
    return rows;
}

PerronCheck perron_check(std::int64_t x, std::int64_t q, std::int64_t a, double constant, unsigned threads)
{
    check_inputs(x, q);
    PerronCheck row = start_row(mertens_ap(x, q, a), constant);
    const int mu_d = moebius(row.d);
    if (mu_d != 0 && static_cast<double>(x) / static_cast<double>(row.d) >= 2.0) {
        auto chars = character_group(row.r);
        assemble(row, mu_d, chars, perron_integrals(static_cast<double>(x), chars, row.d, threads));
    }
    row.passed = std::abs(row.assembled - static_cast<double>(row.sieve_value)) <= row.bound;
    return row;
}

}  // namespace mertens_ap
