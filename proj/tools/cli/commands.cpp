#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>

#include "mertens_ap/analytic.hpp"
#include "mertens_ap/arith.hpp"
#include "mertens_ap/bounds.hpp"
#include "mertens_ap/characters.hpp"
#include "mertens_ap/error.hpp"
#include "mertens_ap/explicit_formula.hpp"
#include "mertens_ap/parallel.hpp"
#include "mertens_ap/perron.hpp"
#include "mertens_ap/selberg.hpp"
#include "mertens_ap/sieve.hpp"
#include "mertens_ap/zeros.hpp"
#include "rng.hpp"

#ifndef MERTENS_AP_DEFAULT_DATA_DIR
#define MERTENS_AP_DEFAULT_DATA_DIR "data/zeros"
#endif

namespace mertens_ap::cli {

namespace {

std::int64_t require_positive(std::int64_t v, const char* flag)
{
    if (v < 1)
        throw ValidationError(std::string(flag) + " must be a positive integer");
    return v;
}

DirichletCharacter require_character(const std::string& label)
{
    if (label.empty())
        throw ValidationError("--chi is required (label q:e1,...,ek)");
    return character_from_label(label);
}

double dyadic_order(double t)
{
    return std::exp2(std::floor(std::log2(t)));
}

std::string sign_name(Sign s)
{
    return s == Sign::plus ? "plus" : "minus";
}

std::vector<Sign> parse_signs(const std::string& s)
{
    if (s == "plus")
        return {Sign::plus};
    if (s == "minus")
        return {Sign::minus};
    if (s == "both")
        return {Sign::plus, Sign::minus};
    throw ValidationError("--sign must be plus, minus or both");
}

std::int64_t sieve_cap(std::int64_t x)
{
    return std::max(kDefaultSegmentCap, x);
}

}  // namespace

std::string resolve_data_dir(const Common& c)
{
    if (!c.data_dir.empty())
        return c.data_dir;
    if (const char* env = std::getenv("MERTENS_AP_DATA"); env != nullptr && *env != '\0')
        return env;
    return MERTENS_AP_DEFAULT_DATA_DIR;
}

ZeroDataset dataset_for(const Common& c, const DirichletCharacter& chi)
{
    const std::string label = inducing_primitive(chi).label_string();
    if (!c.zeros_file.empty()) {
        auto ds = load_zeros(c.zeros_file);
        if (ds.label != label)
            throw ValidationError(c.zeros_file + " holds zeros of " + ds.label + ", not " + label);
        return ds;
    }
    return find_dataset(resolve_data_dir(c), label);
}

Result run_mertens(const MertensArgs& a, const Common& c)
{
    if (a.x.empty())
        throw ValidationError("--x is required");
    Result r;
    r.config = {{"command", "mertens"}, {"x", a.x}};
    r.table.columns = {"x", "M"};
    const auto values = parallel_map(a.x.size(), c.threads, [&](std::size_t i) {
        return mertens(require_positive(a.x[i], "--x"), sieve_cap(a.x[i]));
    });
    for (std::size_t i = 0; i < a.x.size(); ++i)
        r.table.add({a.x[i], values[i]});
    return r;
}

Result run_mertens_ap(const MertensApArgs& a, const Common&)
{
    require_positive(a.x, "--x");
    require_positive(a.q, "--q");
    Result r;
    r.config = {{"command", "mertens-ap"}, {"x", a.x}, {"q", a.q}};
    if (a.a)
        r.config["a"] = *a.a;
    r.table.columns = {"x", "q", "a", "d", "b", "r", "value"};
    if (a.check_identity)
        r.table.columns.insert(r.table.columns.end(), {"identity_rhs", "identity_holds"});

    std::vector<std::int64_t> residues;
    if (a.a)
        residues.push_back(mod_floor(*a.a, a.q));
    else
        for (std::int64_t res = 0; res < a.q; ++res)
            residues.push_back(res);

    const auto table = sieve_segment(1, a.x, false, sieve_cap(a.x));
    for (std::int64_t res : residues) {
        const auto ps = mertens_ap(table, a.x, a.q, res);
        std::vector<Cell> row{ps.x, ps.q, ps.a, ps.d, ps.b, ps.r, ps.value};
        if (a.check_identity) {
            const auto chk = verify_reduction_identity(a.x, a.q, res, sieve_cap(a.x));
            row.emplace_back(chk.rhs);
            row.emplace_back(chk.holds);
        }
        r.table.add(std::move(row));
    }
    return r;
}

Result run_characters(const CharactersArgs& a, const Common&)
{
    Result r;
    if (!a.chi.empty()) {
        const auto chi = character_from_label(a.chi);
        const std::int64_t count = a.values > 0 ? a.values : chi.modulus();
        r.config = {{"command", "characters"}, {"chi", chi.label_string()}, {"values", count}};
        r.table.columns = {"n", "exponent", "order", "re", "im"};
        for (std::int64_t n = 1; n <= count; ++n) {
            const auto v = chi.value(n);
            r.table.add({n, chi.exponent(n), chi.order(), v.real(), v.imag()});
        }
        return r;
    }
    require_positive(a.q, "--q");
    r.config = {{"command", "characters"}, {"q", a.q}};
    r.table.columns = {"index", "label", "order", "conductor", "primitive_label", "kappa", "primitive", "real",
                       "principal"};
    const auto chars = character_group(a.q);
    for (std::size_t i = 0; i < chars.size(); ++i) {
        const auto& chi = chars[i];
        r.table.add({static_cast<std::int64_t>(i), chi.label_string(), chi.order(), chi.conductor(),
                     inducing_primitive(chi).label_string(), std::int64_t{chi.kappa()}, chi.is_primitive(),
                     chi.is_real(), chi.is_principal()});
    }
    return r;
}

Result run_selberg_check(const SelbergArgs& a, const Common& c)
{
    SelbergPair pair{a.h, a.delta, a.n_h};
    pair.validate();
    require_positive(a.samples, "--samples");
    Result r;
    r.config = {{"command", "selberg-check"}, {"h", a.h},           {"delta", a.delta},
                {"samples", a.samples},       {"n_h", a.n_h},       {"seed", c.seed}};
    r.table.columns = {"sign",     "h",          "delta",      "samples",        "violations", "l1_mass",
                       "l1_error", "mass_bound", "max_hat_beyond", "hat_error", "status"};

    Rng rng(c.seed);
    const double reach = a.h + 4.0 / a.delta + 2.0;
    std::vector<double> pts;
    pts.reserve(static_cast<std::size_t>(a.samples));
    pts.push_back(a.h);
    pts.push_back(-a.h);
    while (static_cast<std::int64_t>(pts.size()) < a.samples)
        pts.push_back(rng.uniform(-reach, reach));

    for (Sign s : {Sign::plus, Sign::minus}) {
        std::int64_t bad = 0;
        for (double u : pts) {
            const double chi = indicator(pair, u);
            const double f = evaluate_F(pair, s, u);
            if (s == Sign::plus ? f < chi - 1e-12 : f > chi + 1e-12)
                ++bad;
        }
        const auto mass = l1_mass(pair, s);
        double beyond = 0.0, hat_err = 0.0;
        for (int k = 0; k <= 8; ++k) {
            const double x = a.delta * (1.0 + 0.25 * k);
            for (double xx : {x, -x}) {
                const auto fv = fourier_F(pair, s, xx);
                beyond = std::max(beyond, std::abs(fv.value));
                hat_err = std::max(hat_err, fv.error);
            }
        }
        const double bound = 1.0 / a.delta;
        const bool ok = bad == 0 && mass.value <= bound + 1e-6 && beyond <= 1e-6;
        r.table.add({sign_name(s), a.h, a.delta, a.samples, bad, mass.value, mass.error, bound, beyond, hat_err,
                     std::string(ok ? "PASS" : "FAIL")});
    }
    return r;
}

Result run_explicit_formula(const ExplicitArgs& a, const Common& c)
{
    const auto chi = require_character(a.chi);
    const auto ds = dataset_for(c, chi);
    SelbergPair pair{a.h, a.delta};
    pair.validate();
    std::vector<double> ts = a.t.empty() ? std::vector<double>{15, 20, 30, 50} : a.t;
    const auto signs = parse_signs(a.sign);

    Result r;
    r.config = {{"command", "explicit-formula"}, {"chi", chi.label_string()}, {"t", ts},
                {"h", a.h}, {"delta", a.delta}, {"sign", a.sign}, {"zeros", ds.source}};
    r.table.columns = {"chi",           "t",          "sign",       "lhs",        "rhs",
                       "difference",    "estimate",   "zeros_used", "conductor_term", "pole_term",
                       "gamma_term",    "prime_term", "prime_terms", "status"};
    struct Job {
        double t;
        Sign s;
    };
    std::vector<Job> jobs;
    for (double t : ts)
        for (Sign s : signs)
            jobs.push_back({t, s});
    const auto reports = parallel_map(jobs.size(), c.threads, [&](std::size_t i) {
        return verify_explicit_formula(chi, ds, jobs[i].t, pair, jobs[i].s);
    });
    for (const auto& e : reports)
        r.table.add({e.label, e.t, sign_name(e.sign), e.lhs, e.rhs, e.difference(), e.truncation_error_estimate,
                     e.zeros_used, e.conductor_term, e.pole_term, e.gamma_term, e.prime_term, e.prime_terms,
                     std::string(e.passed() ? "PASS" : "FAIL")});
    return r;
}

Result run_zeros_stats(const ZerosStatsArgs& a, const Common& c)
{
    const auto chi = require_character(a.chi);
    const auto primitive = inducing_primitive(chi);
    const auto ds = dataset_for(c, chi);
    std::vector<double> ts = a.t;
    if (ts.empty())
        for (double t : {20.0, 50.0, 100.0, 150.0, 200.0})
            if (t + a.h <= ds.gamma_max)
                ts.push_back(t);

    Result r;
    r.config = {{"command", "zeros-stats"}, {"chi", chi.label_string()}, {"t", ts},       {"h", a.h},
                {"delta", a.delta},          {"slack", a.slack},         {"threshold", a.threshold},
                {"zeros", ds.source},        {"gamma_max", ds.gamma_max}};
    r.table.columns = {"t",        "N",        "window_deviation", "gg_bound", "gg_margin", "in_regime",
                       "ps_upper", "ps_lower", "ps_holds"};
    for (double t : ts) {
        if (t + a.h > ds.gamma_max)
            throw CoverageError("zeros-stats needs zeros up to t+h", t + a.h);
        const auto gg = goldston_gonek_check(ds, t, a.h, primitive.modulus(), a.slack, a.threshold);
        const auto ps = deviation_prime_sum_bound(ds, primitive, t, a.h, a.delta);
        r.table.add({t, count_zeros(ds, t), gg.deviation, gg.bound, gg.margin, gg.in_regime, ps.upper, ps.lower,
                     ps.lower <= ps.deviation && ps.deviation <= ps.upper});
    }
    return r;
}

Result run_typicality(const TypicalityArgs& a, const Common& c)
{
    const auto chi = require_character(a.chi);
    const auto ds = dataset_for(c, chi);
    const std::int64_t q = chi.modulus();
    Result r;
    r.config = {{"command", "typicality"}, {"chi", chi.label_string()}, {"delta", a.delta}, {"zeros", ds.source}};

    if (!a.n.empty()) {
        r.config["n"] = a.n;
        r.table.columns = {"n", "T", "V", "fallback"};
        const auto found = parallel_map(a.n.size(), c.threads, [&](std::size_t i) {
            const double T = a.T > 0.0 ? a.T : dyadic_order(static_cast<double>(a.n[i]));
            return std::pair{T, minimal_typical_V(ds, chi, a.n[i], T, a.delta)};
        });
        for (std::size_t i = 0; i < a.n.size(); ++i)
            r.table.add({a.n[i], found[i].first, found[i].second.V, found[i].second.fallback});
        return r;
    }

    std::vector<double> ts = a.t;
    if (a.zeros)
        for (double g : ds.ordinates)
            if (g + 1.0 <= ds.gamma_max && g >= 4.0)
                ts.push_back(g);
    if (ts.empty())
        throw ValidationError("typicality needs --t, --n or --all-zeros");
    r.config["t"] = ts;
    r.config["T"] = a.T;
    r.config["V"] = a.V;

    r.table.columns = {"t",           "T",          "V",           "y",           "crit_i_sup",
                       "crit_i_margin", "crit_ii_max", "crit_ii_margin", "crit_iii_max", "crit_iii_margin",
                       "typical"};
    const auto reports = parallel_map(ts.size(), c.threads, [&](std::size_t i) {
        const double T = a.T > 0.0 ? a.T : dyadic_order(ts[i]);
        const std::int64_t V = a.V > 0 ? a.V : static_cast<std::int64_t>(std::ceil(range_bounds(T, q).b));
        return classify_typical(ds, chi, ts[i], T, V, a.delta);
    });
    for (const auto& t : reports)
        r.table.add({t.t, t.T, t.V, t.y, t.criterion_i_sup, t.criterion_i_margin, t.criterion_ii_max,
                     t.criterion_ii_margin, t.criterion_iii_max, t.criterion_iii_margin, t.typical()});
    return r;
}

namespace {

struct Sweep {
    std::int64_t samples = 0;
    std::int64_t failures = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    std::string argmin;
};

Sweep sweep_elem1(std::int64_t samples, Rng& rng)
{
    Sweep s;
    const double lo = std::log(1e6), hi = 600.0;
    while (s.samples < samples) {
        const auto q = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::exp(rng.uniform(0.0, lo))));
        const double T = std::exp(rng.uniform(lo, hi)) / static_cast<double>(q);
        const auto rb = range_bounds(T, q);
        const double v_lo = std::max(rb.a, std::numbers::e * (1.0 + 1e-12));
        if (v_lo > rb.b)
            continue;
        const double V = rng.uniform(v_lo, rb.b);
        const double m = check_elem1(V, q, T);
        ++s.samples;
        if (m < 0.0)
            ++s.failures;
        if (m < s.min_margin) {
            s.min_margin = m;
            s.argmin = "V=" + std::to_string(V) + " q=" + std::to_string(q) + " T=" + std::to_string(T);
        }
    }
    return s;
}

Sweep sweep_elem2(std::int64_t samples, Rng& rng)
{
    Sweep s;
    while (s.samples < samples) {
        const double C = rng.uniform(0.01, 3.5);
        const double a_min = 4.0 * std::pow(C, 4) + 1.0;
        const double A = rng.uniform(a_min, std::max(a_min, 700.0));
        // log V up to a little beyond log V1 = A + C log A
        const double V = std::exp(rng.uniform(C * (1.0 + 1e-9) + 1e-9, A + C * std::log(A) + 3.0));
        const double m = check_elem2(A, C, V);
        ++s.samples;
        if (m < 0.0)
            ++s.failures;
        if (m < s.min_margin) {
            s.min_margin = m;
            s.argmin = "A=" + std::to_string(A) + " C=" + std::to_string(C) + " V=" + std::to_string(V);
        }
    }
    return s;
}

}  // namespace

Result run_inequalities(const InequalitiesArgs& a, const Common& c)
{
    if (a.which != "elem1" && a.which != "elem2" && a.which != "both")
        throw ValidationError("--which must be elem1, elem2, both or logl");
    Result r;
    r.config = {{"command", "inequalities"}, {"which", a.which}, {"samples", a.samples}, {"seed", c.seed}};
    r.table.columns = {"inequality", "samples", "failures", "min_margin", "argmin"};

    const bool single1 = a.V && a.q && a.T;
    const bool single2 = a.A && a.C && a.V;
    if (single1 || single2) {
        if (single1 && a.which != "elem2") {
            const double m = check_elem1(*a.V, *a.q, *a.T);
            r.table.add({std::string("elem1"), std::int64_t{1}, std::int64_t{m < 0.0}, m,
                         "V=" + std::to_string(*a.V) + " q=" + std::to_string(*a.q) + " T=" + std::to_string(*a.T)});
        }
        if (single2 && a.which != "elem1") {
            const double m = check_elem2(*a.A, *a.C, *a.V);
            r.table.add({std::string("elem2"), std::int64_t{1}, std::int64_t{m < 0.0}, m,
                         "A=" + std::to_string(*a.A) + " C=" + std::to_string(*a.C) + " V=" + std::to_string(*a.V)});
        }
        if (r.table.rows.empty())
            throw ValidationError("single evaluation needs --V --q --T (elem1) or --A --C --V (elem2)");
        return r;
    }

    require_positive(a.samples, "--samples");
    Rng rng(c.seed);
    if (a.which != "elem2") {
        const auto s = sweep_elem1(a.samples, rng);
        r.table.add({std::string("elem1"), s.samples, s.failures, s.min_margin, s.argmin});
    }
    if (a.which != "elem1") {
        const auto s = sweep_elem2(a.samples, rng);
        r.table.add({std::string("elem2"), s.samples, s.failures, s.min_margin, s.argmin});
    }
    return r;
}

Result run_logl_bounds(const LogLArgs& a, const Common& c)
{
    const auto chi = require_character(a.chi.empty() ? std::string("1:") : a.chi);
    // zeros only feed the nearest-zero column, so a dataset that stops short of t is dropped
    std::optional<ZeroDataset> ds;
    try {
        ds = dataset_for(c, chi);
        if (std::abs(a.t) > ds->gamma_max)
            ds.reset();
    } catch (const CoverageError&) {
    }
    const auto rep = diagnostic_logL_bounds(chi, ds ? &*ds : nullptr, a.sigma, a.t, a.V, a.delta, a.threshold);
    Result r;
    r.config = {{"command", "inequalities"}, {"which", "logl"}, {"chi", chi.label_string()},
                {"sigma", a.sigma},          {"t", a.t},        {"V", a.V},
                {"delta", a.delta},          {"threshold", a.threshold}};
    r.table.columns = {"sigma",           "t",
                       "log_abs_L",       "generic_rhs",
                       "generic_margin",  "generic_regime",
                       "sigma0",          "large_sigma_ratio",
                       "small_sigma_ratio", "trivial_ratio",
                       "nearest_zero",    "status"};
    std::string status = "DIAGNOSTIC";
    if (rep.generic_regime)
        status = rep.generic_margin >= 0.0 ? "PASS" : "FAIL";
    r.table.add({rep.sigma, rep.t, rep.log_abs_L, rep.generic_rhs, rep.generic_margin, rep.generic_regime,
                 rep.sigma0, rep.large_sigma_ratio, rep.small_sigma_ratio, rep.trivial_ratio,
                 rep.nearest_zero_distance, status});
    return r;
}

Result run_envelope_table(const EnvelopeArgs& a, const Common& c)
{
    if (!(a.epsilon > 0.0))
        throw ValidationError("--epsilon must be positive");
    Result r;
    r.config = {{"command", "envelope-table"}, {"epsilon", a.epsilon}};
    std::vector<ComparisonRow> rows;
    if (a.x.empty() && !a.q) {
        r.config["table"] = "standard";
        rows = standard_comparison_table(a.epsilon, c.threads);
    } else {
        const std::int64_t q = require_positive(a.q.value_or(1), "--q");
        std::vector<std::int64_t> xs = a.x;
        if (xs.empty())
            xs = {100, 1000, 10000, 100000, 1000000};
        for (auto x : xs)
            require_positive(x, "--x");
        r.config["x"] = xs;
        r.config["q"] = q;
        r.config["a"] = a.a;
        rows = comparison_table(xs, q, a.a, a.epsilon, c.threads);
    }
    r.table.columns = {"x",       "q",       "a",     "d",      "M",     "log_envelope",
                       "envelope", "degenerate", "trivial", "gonek", "within"};
    for (const auto& row : rows)
        r.table.add({row.x, row.q, row.a, row.envelope.d, row.value, row.envelope.log_value,
                     row.envelope.linear ? Cell{row.envelope.value} : Cell{}, row.envelope.degenerate, row.trivial,
                     row.gonek, row.within});
    return r;
}

Result run_contour_schedule(const ContourArgs& a, const Common& c)
{
    require_positive(a.q, "--q");
    std::optional<DirichletCharacter> chi;
    std::optional<ZeroDataset> ds;
    if (!a.chi.empty()) {
        chi = character_from_label(a.chi);
        if (chi->modulus() != a.q)
            throw ValidationError("--chi modulus differs from --q");
        ds = dataset_for(c, *chi);
    }
    const auto s = contour_schedule(a.x, a.q, chi ? &*chi : nullptr, ds ? &*ds : nullptr, a.delta, a.c, a.l_const);
    Result r;
    r.config = {{"command", "contour-schedule"}, {"x", a.x},     {"q", a.q},
                {"chi", a.chi},                  {"delta", a.delta}, {"c", a.c},
                {"l_const", a.l_const},          {"K", s.K},     {"l", s.l},
                {"degenerate", s.degenerate},    {"constant_branch", s.constant_branch}};
    r.table.columns = {"K", "l", "degenerate", "constant_branch", "k", "T_k", "n_begin", "n_end", "V", "source"};
    if (s.segments.empty()) {
        r.table.add({s.K, s.l, s.degenerate, s.constant_branch, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}, Cell{}});
        return r;
    }
    for (const auto& seg : s.segments)
        r.table.add({s.K, s.l, s.degenerate, s.constant_branch, seg.k, std::ldexp(1.0, static_cast<int>(seg.k)),
                     seg.n_begin, seg.n_end, seg.V, std::string(seg.from_zeros ? "zeros" : "ceil_b")});
    return r;
}

Result run_perron_check(const PerronArgs& a, const Common& c)
{
    require_positive(a.x, "--x");
    require_positive(a.q, "--q");
    Result r;
    r.config = {{"command", "perron-check"}, {"x", a.x}, {"q", a.q}, {"C", a.C}};
    std::vector<PerronCheck> checks;
    if (a.a) {
        r.config["a"] = *a.a;
        checks.push_back(perron_check(a.x, a.q, *a.a, a.C, c.threads));
    } else {
        checks = perron_check_all(a.x, a.q, a.C, c.threads);
    }
    r.table.columns = {"x",     "q",          "a",            "d",          "b",     "r",
                       "assembled", "imag_residue", "quad_error", "sieve", "bound", "status"};
    for (const auto& p : checks)
        r.table.add({p.x, p.q, p.a, p.d, p.b, p.r, p.assembled, p.imag_residue, p.quad_error, p.sieve_value, p.bound,
                     std::string(p.passed ? "PASS" : "FAIL")});
    return r;
}

}  // namespace mertens_ap::cli
