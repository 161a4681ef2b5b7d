#include "mertens_ap/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "mertens_ap/analytic.hpp"
#include "mertens_ap/arith.hpp"
#include "mertens_ap/error.hpp"
#include "mertens_ap/parallel.hpp"
#include "mertens_ap/sieve.hpp"

namespace mertens_ap {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
const double kLinearCeiling = std::log(1e300);

double loglog_or_zero(double v)
{
    return v > std::numbers::e ? std::log(std::log(v)) : 0.0;
}

}  // namespace

Envelope main_envelope(const EnvelopeParams& p)
{
    if (p.q < 1)
        throw DomainError("main_envelope needs q >= 1");
    if (!(p.epsilon > 0.0))
        throw DomainError("main_envelope needs epsilon > 0");
    if (!(p.x >= 1.0))
        throw DomainError("main_envelope needs x >= 1");

    Envelope e;
    e.d = gcd(mod_floor(p.a, p.q), p.q);
    e.x_over_d = p.x / static_cast<double>(e.d);
    if (e.x_over_d < 16.0) {
        e.x_over_d = 16.0;
        e.degenerate = true;
    }
    const double lx = std::log(e.x_over_d);
    e.log_value = 0.5 * lx + std::sqrt(lx) * std::pow(std::log(lx), 3.0 + p.epsilon);
    e.linear = e.log_value < kLinearCeiling;
    e.value = e.linear ? std::exp(e.log_value) : std::numeric_limits<double>::infinity();
    return e;
}

std::vector<ComparisonRow> comparison_table(const std::vector<std::int64_t>& xs, std::int64_t q, std::int64_t a,
                                            double epsilon, unsigned threads)
{
    if (q < 1)
        throw DomainError("comparison_table needs q >= 1");
    if (xs.empty())
        return {};
    const std::int64_t x_max = *std::max_element(xs.begin(), xs.end());
    if (*std::min_element(xs.begin(), xs.end()) < 1)
        throw DomainError("comparison_table needs x >= 1");
    const auto table = sieve_segment(1, x_max, false, std::max(kDefaultSegmentCap, x_max));

    return parallel_map(xs.size(), threads, [&](std::size_t i) {
        ComparisonRow row;
        row.x = xs[i];
        row.q = q;
        row.a = mod_floor(a, q);
        row.value = mertens_ap(table, row.x, q, row.a).value;
        const auto dx = static_cast<double>(row.x);
        row.envelope = main_envelope({dx, q, row.a, epsilon});
        row.trivial = dx / static_cast<double>(q);
        const double lll = dx > std::exp(std::numbers::e) ? std::log(std::log(std::log(dx))) : -1.0;
        row.gonek = lll > 0.0 ? std::sqrt(dx) * std::pow(lll, 1.25) : 0.0;
        const double m = std::abs(static_cast<double>(row.value));
        row.within = m <= row.trivial + 1.0 && m <= row.envelope.value;
        return row;
    });
}

std::vector<ComparisonRow> standard_comparison_table(double epsilon, unsigned threads)
{
    static const std::vector<std::int64_t> xs{100, 1000, 10000, 100000, 1000000};
    static const std::pair<std::int64_t, std::int64_t> progressions[] = {
        {1, 0},  {3, 1},  {3, 2},  {4, 1},   {4, 2},   {4, 3},    {5, 2},
        {7, 3},  {10, 1}, {12, 5}, {30, 7},  {100, 1}, {1000, 1}, {1000, 0},
    };
    std::vector<ComparisonRow> rows;
    for (const auto& [q, a] : progressions) {
        auto part = comparison_table(xs, q, a, epsilon, threads);
        rows.insert(rows.end(), part.begin(), part.end());
    }
    return rows;
}

double check_elem1(double V, std::int64_t q, double T)
{
    const auto rb = range_bounds(T, q);
    if (!(V > std::numbers::e))
        throw DomainError("check_elem1 needs V > e");
    if (V < rb.a || V > rb.b)
        throw DomainError("check_elem1 needs a(T,q) <= V <= b(T,q)");
    const double eta = 1.0 / std::log(V);
    const double k = std::floor(V / (1.0 + eta));
    const double llqT = std::log(std::log(static_cast<double>(q) * T));
    const double lhs = k * (std::log(k * llqT) - 2.0 * std::log(eta * V));
    const double rhs = -V * std::log(V / llqT) + 2.0 * V * std::log(std::log(V)) + V;
    return rhs - lhs;
}

double check_elem2(double A, double C, double V)
{
    if (!(C > 0.0))
        throw DomainError("check_elem2 needs C > 0");
    if (!(A >= 4.0 * std::pow(C, 4) + 1.0))
        throw DomainError("check_elem2 needs A >= 4C^4 + 1");
    if (!(V > std::exp(C)))
        throw DomainError("check_elem2 needs V > e^C");
    // long double keeps e^A A^C and A V finite well past double range
    const long double a = A, c = C, v = V;
    const long double rhs = std::exp(a) * std::pow(a, c);
    const long double lhs = a * v - v * std::log(v) + c * v * std::log(std::log(v));
    return static_cast<double>(rhs - lhs);
}

LogLReport diagnostic_logL_bounds(const DirichletCharacter& chi, const ZeroDataset* ds, double sigma, double t,
                                  std::int64_t V, double delta, double regime_threshold)
{
    if (!(sigma > 0.5 && sigma <= 2.0))
        throw DomainError("diagnostic_logL_bounds needs 1/2 < sigma <= 2");
    if (!(std::abs(t) >= 1.0))
        throw DomainError("diagnostic_logL_bounds needs |t| >= 1");
    if (V < 1 || !(delta > 0.0))
        throw DomainError("diagnostic_logL_bounds needs V >= 1 and delta > 0");
    if (ds != nullptr && std::abs(t) > ds->gamma_max)
        throw CoverageError("diagnostic_logL_bounds needs zeros up to |t|", std::abs(t));

    const auto q = static_cast<double>(chi.modulus());
    const double at = std::abs(t);
    LogLReport r;
    r.sigma = sigma;
    r.t = t;
    const auto lv = eval_L({sigma, t}, chi, 1e-10);
    r.log_abs_L = std::log(std::abs(lv.value));
    r.L_error = lv.error;

    const double qt = q * at;
    r.generic_defined = qt > std::exp(std::numbers::e);
    if (r.generic_defined) {
        const double L = std::log(qt), LL = std::log(L), LLL = std::log(LL);
        r.generic_rhs = -(L / LL) * std::log(1.0 / (sigma - 0.5)) - 3.0 * L * LLL / LL;
        r.generic_margin = r.log_abs_L - r.generic_rhs;
        r.generic_regime = qt >= regime_threshold;
    } else {
        r.generic_rhs = kNaN;
        r.generic_margin = kNaN;
    }

    // dyadic order of t
    const double T = std::exp2(std::floor(std::log2(at)));
    const double dV = static_cast<double>(V);
    const double log_qT = std::log(q * T);
    r.sigma0 = 0.5 + dV / log_qT;
    const double neg = std::max(0.0, -r.log_abs_L);
    const double llq = loglog_or_zero(q);
    const double q_term = llq > 0.0 ? std::sqrt(std::log(q) / llq) : 0.0;

    r.large_sigma_ratio = kNaN;
    r.small_sigma_ratio = kNaN;
    if (sigma >= r.sigma0) {
        r.large_sigma_ratio = neg / (dV / delta + q_term);
    } else {
        const double at_sigma0 = std::log(std::abs(eval_L({r.sigma0, t}, chi, 1e-10).value));
        const double main = at_sigma0 - dV * std::log((r.sigma0 - 0.5) / (sigma - 0.5)) -
                            2.0 * (1.0 + delta) * dV * loglog_or_zero(dV);
        const double q_small = llq > 0.0 ? std::sqrt(std::log(q)) / llq : 0.0;
        r.small_sigma_ratio = std::max(0.0, main - r.log_abs_L) / (dV / (delta * delta) + q_small);
    }

    // σ = 1/2 + 1/log x
    const double log_x = 1.0 / (sigma - 0.5);
    r.trivial_ratio = log_x > 1.0 ? neg / (std::log(q * std::max(at, 2.0)) * std::log(log_x)) : kNaN;

    if (ds != nullptr && !ds->ordinates.empty()) {
        double best = std::numeric_limits<double>::infinity();
        for (double g : ds->signed_ordinates())
            best = std::min(best, std::abs(g - t));
        r.nearest_zero_distance = best;
    }
    return r;
}

ContourSchedule contour_schedule(double x, std::int64_t q, const DirichletCharacter* chi, const ZeroDataset* ds,
                                 double delta, double c, std::int64_t l_const)
{
    if (!(x >= 16.0))
        throw DomainError("contour_schedule needs x >= 16");
    if (q < 1)
        throw DomainError("contour_schedule needs q >= 1");
    if (chi != nullptr && chi->modulus() != q)
        throw DomainError("contour_schedule character modulus differs from q");

    ContourSchedule s;
    const double lx = std::log(x);
    s.K = static_cast<std::int64_t>(std::floor(lx / std::numbers::ln2));
    s.constant_branch = static_cast<double>(q) > std::exp(std::sqrt(lx));
    s.l = s.constant_branch ? l_const
                            : static_cast<std::int64_t>(std::floor(std::sqrt(lx) * std::pow(std::log(lx), c)));
    s.degenerate = s.l > s.K;
    if (s.degenerate)
        return s;
    if (s.K >= 62)
        throw SizeError("contour_schedule needs log2 x < 62");

    for (std::int64_t k = s.l; k <= s.K; ++k)
        s.T.push_back(std::ldexp(1.0, static_cast<int>(k)));

    const std::int64_t T_K = std::int64_t{1} << s.K;
    const bool covered = chi != nullptr && ds != nullptr && static_cast<double>(T_K) + 1.0 <= ds->gamma_max;

    for (std::int64_t k = s.l; k < s.K; ++k) {
        const std::int64_t Tk = std::int64_t{1} << k;
        const auto dT = static_cast<double>(Tk);
        // b(T,q) needs qT > e; below that only V = 1 makes sense
        const bool tiny = static_cast<double>(q) * dT <= std::numbers::e;
        if (!covered || tiny) {
            const auto V = tiny ? std::int64_t{1} : static_cast<std::int64_t>(std::ceil(range_bounds(dT, q).b));
            s.segments.push_back({k, Tk, 2 * Tk, V, false});
            continue;
        }
        for (std::int64_t n = Tk; n < 2 * Tk; ++n) {
            const auto V = minimal_typical_V(*ds, *chi, n, dT, delta).V;
            auto& segs = s.segments;
            if (!segs.empty() && segs.back().k == k && segs.back().V == V && segs.back().n_end == n)
                segs.back().n_end = n + 1;
            else
                segs.push_back({k, n, n + 1, V, true});
        }
    }
    return s;
}

}  // namespace mertens_ap
