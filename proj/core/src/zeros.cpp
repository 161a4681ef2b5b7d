#include "mertens_ap/zeros.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <numbers>
#include <sstream>

#include "mertens_ap/error.hpp"
#include "mertens_ap/selberg.hpp"

namespace mertens_ap {

namespace {

constexpr double kPi = std::numbers::pi;

std::string trim(const std::string& s)
{
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int significant_digits(const std::string& tok)
{
    int digits = 0;
    bool leading = true;
    for (char c : tok) {
        if (c == 'e' || c == 'E')
            break;
        if (!std::isdigit(static_cast<unsigned char>(c)))
            continue;
        if (leading && c == '0')
            continue;
        leading = false;
        ++digits;
    }
    return digits;
}

SieveSegment lambda_table_for(double y)
{
    const auto n = static_cast<std::int64_t>(std::floor(y));
    return sieve_segment(1, std::max<std::int64_t>(n, 1), true);
}

}  // namespace

std::vector<double> ZeroDataset::signed_ordinates() const
{
    if (!symmetric)
        return ordinates;
    std::vector<double> out;
    out.reserve(2 * ordinates.size());
    for (auto it = ordinates.rbegin(); it != ordinates.rend(); ++it)
        if (*it > 0.0)
            out.push_back(-*it);
    out.insert(out.end(), ordinates.begin(), ordinates.end());
    return out;
}

std::vector<double> ZeroDataset::ordinates_in(double lo, double hi) const
{
    std::vector<double> out;
    auto collect = [&](double g) {
        if (g > lo && g < hi)
            out.push_back(g);
    };
    if (symmetric && lo < 0.0) {
        for (auto it = ordinates.rbegin(); it != ordinates.rend(); ++it)
            if (*it > 0.0)
                collect(-*it);
    }
    auto first = std::upper_bound(ordinates.begin(), ordinates.end(), lo);
    for (auto it = first; it != ordinates.end() && *it < hi; ++it)
        collect(*it);
    return out;
}

ZeroDataset parse_zeros(std::istream& in, const std::string& origin)
{
    ZeroDataset ds;
    std::map<std::string, std::string> header;
    std::string line;
    std::int64_t lineno = 0;
    bool in_body = false;
    while (std::getline(in, line)) {
        ++lineno;
        std::string t = trim(line);
        if (t.empty())
            continue;
        if (t[0] == '#') {
            if (in_body)
                throw ParseError(origin, lineno, "header line after ordinates");
            std::string kv = trim(t.substr(1));
            auto eq = kv.find('=');
            if (eq == std::string::npos)
                continue;  // plain comment
            header[trim(kv.substr(0, eq))] = trim(kv.substr(eq + 1));
            continue;
        }
        in_body = true;
        char* end = nullptr;
        double g = std::strtod(t.c_str(), &end);
        if (end == t.c_str() || *end != '\0' || !std::isfinite(g))
            throw ParseError(origin, lineno, "malformed ordinate '" + t + "'");
        if (g != 0.0 && significant_digits(t) < 9)
            throw ValidationError(origin + ":" + std::to_string(lineno) +
                                  ": ordinate needs at least 9 significant digits");
        if (!ds.ordinates.empty() && g <= ds.ordinates.back())
            throw ValidationError(origin + ":" + std::to_string(lineno) + ": ordinates must be strictly increasing");
        ds.ordinates.push_back(g);
    }

    auto require = [&](const char* key) -> const std::string& {
        auto it = header.find(key);
        if (it == header.end())
            throw ParseError(origin, lineno, std::string("missing header key '") + key + "'");
        return it->second;
    };
    if (require("format") != "lzeros-v1")
        throw ParseError(origin, 1, "unsupported format '" + header["format"] + "'");
    try {
        std::size_t used = 0;
        const std::string& qs = require("q");
        ds.q = std::stoll(qs, &used);
        if (used != qs.size() || ds.q < 1)
            throw std::invalid_argument("q");
        const std::string& gs = require("gamma_max");
        ds.gamma_max = std::stod(gs, &used);
        if (used != gs.size() || !(ds.gamma_max >= 0.0))
            throw std::invalid_argument("gamma_max");
    }
    catch (const std::logic_error& e) {
        throw ParseError(origin, 1, std::string("bad header value for ") + e.what());
    }
    ds.label = require("label");
    if (ds.label.rfind(std::to_string(ds.q) + ":", 0) != 0)
        throw ValidationError(origin + ": label '" + ds.label + "' does not match q=" + std::to_string(ds.q));
    if (auto it = header.find("symmetric"); it != header.end())
        ds.symmetric = it->second == "true";
    else
        ds.symmetric = ds.q <= 4;
    if (auto it = header.find("source"); it != header.end())
        ds.source = it->second;

    for (double g : ds.ordinates) {
        if (std::abs(g) > ds.gamma_max)
            throw ValidationError(origin + ": ordinate " + std::to_string(g) + " exceeds gamma_max");
        if (ds.symmetric && g < 0.0)
            throw ValidationError(origin + ": symmetric dataset must list only nonnegative ordinates");
    }
    return ds;
}

ZeroDataset load_zeros(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(path, 0, "cannot open file");
    return parse_zeros(in, path);
}

void write_zeros(std::ostream& out, const ZeroDataset& ds)
{
    out << "# format=lzeros-v1\n";
    out << "# q=" << ds.q << "\n";
    out << "# label=" << ds.label << "\n";
    out << "# gamma_max=" << std::setprecision(12) << ds.gamma_max << "\n";
    if (ds.symmetric)
        out << "# symmetric=true\n";
    if (!ds.source.empty())
        out << "# source=" << ds.source << "\n";
    out << std::setprecision(17);
    for (double g : ds.ordinates)
        out << g << "\n";
}

ZeroDataset find_dataset(const std::string& dir, const std::string& label)
{
    namespace fs = std::filesystem;
    std::error_code ec;
    if (!fs::is_directory(dir, ec))
        throw DomainError("zero dataset directory '" + dir + "' does not exist");
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".lzeros")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    for (const auto& f : files) {
        auto ds = load_zeros(f.string());
        if (ds.label == label)
            return ds;
    }
    throw CoverageError("no zero dataset for character " + label + " in '" + dir + "'", 0.0);
}

std::int64_t count_zeros(const ZeroDataset& ds, double t)
{
    if (t < 0.0)
        throw DomainError("count_zeros needs t >= 0");
    if (t > ds.gamma_max)
        throw CoverageError("t=" + std::to_string(t) + " beyond dataset coverage gamma_max=" +
                                std::to_string(ds.gamma_max),
                            t);
    auto lo = std::lower_bound(ds.ordinates.begin(), ds.ordinates.end(), 0.0);
    auto hi = std::upper_bound(ds.ordinates.begin(), ds.ordinates.end(), t);
    return hi > lo ? hi - lo : 0;
}

double window_deviation(const ZeroDataset& ds, double t, double h)
{
    if (!(t > 0.0))
        throw DomainError("window_deviation needs t > 0");
    if (!(h > 0.0) || h > std::sqrt(t))
        throw DomainError("window_deviation needs 0 < h <= sqrt(t)");
    const double count = static_cast<double>(count_zeros(ds, t + h) - count_zeros(ds, t - h));
    return count - h / kPi * std::log(static_cast<double>(ds.q) * t / (2.0 * kPi));
}

GoldstonGonekReport goldston_gonek_check(const ZeroDataset& ds, double t, double h, std::int64_t q, double slack,
                                         double regime_threshold)
{
    const double qt = static_cast<double>(q) * t;
    if (!(qt > std::exp(std::numbers::e)))
        throw DomainError("goldston_gonek_check needs qt > e^e");
    GoldstonGonekReport r;
    r.deviation = window_deviation(ds, t, h);
    const double l1 = std::log(qt), l2 = std::log(l1), l3 = std::log(l2);
    r.bound = l1 / (2.0 * l2) + (0.5 + slack) * l1 * l3 / (l2 * l2);
    r.margin = r.bound - std::abs(r.deviation);
    r.in_regime = qt >= regime_threshold;
    return r;
}

PrimeSumWindow deviation_prime_sum_bound(const ZeroDataset& ds, const DirichletCharacter& chi, double t, double h,
                                         double delta)
{
    if (!chi.is_primitive())
        throw DomainError("deviation_prime_sum_bound needs a primitive character");
    const double pmax = std::exp(2.0 * kPi * delta);
    if (pmax > 1e8)
        throw SizeError("prime range e^{2 pi delta} too large");
    SelbergPair pair{h, delta};
    PrimeSumWindow w;
    w.deviation = window_deviation(ds, t, h);
    const double q = static_cast<double>(chi.modulus());
    double sum_plus = 0.0, sum_minus = 0.0;
    for (std::int64_t p : primes_up_to(static_cast<std::int64_t>(pmax))) {
        const double lp = std::log(static_cast<double>(p));
        const cplx term = chi.value(p) * lp * std::polar(std::pow(static_cast<double>(p), -0.5), -t * lp);
        sum_plus += term.real() * fourier_F_closed(pair, Sign::plus, lp / (2.0 * kPi));
        sum_minus += term.real() * fourier_F_closed(pair, Sign::minus, lp / (2.0 * kPi));
    }
    w.upper = std::log(q * t) / (2.0 * kPi * delta) - sum_plus / kPi;
    w.lower = -std::log(q * t) / (2.0 * kPi * delta) - sum_minus / kPi;
    return w;
}

RangeBounds range_bounds(double T, std::int64_t q)
{
    if (q < 1)
        throw DomainError("range_bounds needs q >= 1");
    const double qT = static_cast<double>(q) * T;
    if (!(qT > std::numbers::e))
        throw DomainError("range_bounds needs qT > e");
    const double ll = std::log(std::log(qT));
    return {std::sqrt(std::log(static_cast<double>(q))) * ll * ll, std::log(qT) / ll};
}

std::int64_t max_window_count(const std::vector<double>& inside, double length)
{
    if (!(length < 2.0))
        return static_cast<std::int64_t>(inside.size());
    std::int64_t best = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < inside.size(); ++i) {
        if (j < i)
            j = i;
        while (j < inside.size() && inside[j] <= inside[i] + length)
            ++j;
        best = std::max<std::int64_t>(best, static_cast<std::int64_t>(j - i));
    }
    return best;
}

double criterion_i_sup(const DirichletCharacter& primitive, double t, double y, const SieveSegment* table)
{
    const auto n_max = static_cast<std::int64_t>(std::floor(y));
    if (n_max < 2)
        return 0.0;
    SieveSegment local;
    if (table == nullptr || table->lo != 1 || table->hi < n_max || table->lambda.empty()) {
        local = lambda_table_for(y);
        table = &local;
    }
    const double log_y = std::log(y);
    std::vector<cplx> coef;
    std::vector<double> logn;
    double lip = 0.0, tail = 0.0;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        const double lam = table->lambda_at(n);
        if (lam == 0.0)
            continue;
        const cplx chi = primitive.value(n);
        if (chi == 0.0)
            continue;
        const double ln = std::log(static_cast<double>(n));
        const double weight = lam / ln * std::log(y / static_cast<double>(n)) / log_y;
        const cplx c = chi * weight * std::polar(1.0, -t * ln);
        coef.push_back(c);
        logn.push_back(ln);
        lip += std::abs(c) * ln * std::exp(-0.5 * ln);
        tail += std::abs(c) * std::exp(-3.0 * ln);
    }
    const double step = 1.0 / (4.0 * log_y);
    double sup = 0.0;
    for (double sigma = 0.5;; sigma += step) {
        const double s = std::min(sigma, 3.0);
        cplx acc = 0.0;
        for (std::size_t k = 0; k < coef.size(); ++k)
            acc += coef[k] * std::exp(-s * logn[k]);
        sup = std::max(sup, std::abs(acc));
        if (s >= 3.0)
            break;
    }
    // Between grid points |S| moves by at most lip·step/2; beyond σ = 3 it is below `tail`.
    return std::max(sup + lip * step / 2.0, tail);
}

TypicalityReport classify_typical(const ZeroDataset& ds, const DirichletCharacter& chi, double t, double T,
                                  std::int64_t V, double delta, const SieveSegment* lambda_table)
{
    if (!(T > std::numbers::e))
        throw DomainError("classify_typical needs T > e");
    if (!(delta > 0.0 && delta <= 1.0))
        throw DomainError("classify_typical needs 0 < delta <= 1");
    if (t < T || t > 2.0 * T)
        throw DomainError("classify_typical needs t in [T, 2T]");
    const std::int64_t q = chi.modulus();
    const auto rb = range_bounds(T, q);
    if (V < 1 || static_cast<double>(V) < rb.a - 1e-12 || static_cast<double>(V) > std::ceil(rb.b))
        throw DomainError("V=" + std::to_string(V) + " outside [a(T,q), ceil(b(T,q))] = [" + std::to_string(rb.a) +
                          ", " + std::to_string(std::ceil(rb.b)) + "]");
    if (t + 1.0 > ds.gamma_max)
        throw CoverageError("classify_typical needs zeros up to t+1", t + 1.0);
    const DirichletCharacter primitive = inducing_primitive(chi);
    if (ds.label != primitive.label_string())
        throw ValidationError("zero dataset " + ds.label + " does not belong to " + primitive.label_string());

    const double qT = static_cast<double>(q) * T;
    const double log_qT = std::log(qT);
    const auto dv = static_cast<double>(V);

    TypicalityReport r;
    r.t = t;
    r.T = T;
    r.V = V;
    r.delta = delta;
    r.y = std::pow(qT, 1.0 / dv);
    r.criterion_i_sup = criterion_i_sup(primitive, t, r.y, lambda_table);
    r.criterion_i_margin = 2.0 * dv - r.criterion_i_sup;

    const auto inside = ds.ordinates_in(t - 1.0, t + 1.0);
    r.criterion_ii_max = max_window_count(inside, 2.0 * delta * kPi * dv / log_qT);
    r.criterion_ii_margin = (1.0 + delta) * dv - static_cast<double>(r.criterion_ii_max);
    const double len_iii = V == 1 ? INFINITY : 2.0 * kPi * dv / (std::log(dv) * log_qT);
    r.criterion_iii_max = max_window_count(inside, len_iii);
    r.criterion_iii_margin = dv - static_cast<double>(r.criterion_iii_max);
    return r;
}

MinimalV minimal_typical_V(const ZeroDataset& ds, const DirichletCharacter& chi, std::int64_t n, double T,
                           double delta)
{
    const auto dn = static_cast<double>(n);
    if (dn < T || dn + 1.0 > 2.0 * T)
        throw DomainError("minimal_typical_V needs [n, n+1] inside [T, 2T]");
    if (dn + 2.0 > ds.gamma_max)
        throw CoverageError("minimal_typical_V needs zeros up to n+2", dn + 2.0);
    const std::int64_t q = chi.modulus();
    const auto rb = range_bounds(T, q);
    const auto v_hi = static_cast<std::int64_t>(std::ceil(rb.b));
    const std::int64_t v_lo = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(rb.a - 1e-12)));
    const double log_qT = std::log(static_cast<double>(q) * T);
    const auto table = lambda_table_for(static_cast<double>(q) * T);

    for (std::int64_t V = v_lo; V <= v_hi; ++V) {
        const auto dv = static_cast<double>(V);
        double w = 2.0 * delta * kPi * dv / log_qT;
        if (V > 1)
            w = std::min(w, 2.0 * kPi * dv / (std::log(dv) * log_qT));
        const double step = std::min(0.01, w / 4.0);
        const auto steps = static_cast<std::int64_t>(std::ceil(1.0 / step));
        bool ok = true;
        for (std::int64_t j = 0; j <= steps && ok; ++j) {
            const double t = std::min(dn + static_cast<double>(j) * step, dn + 1.0);
            ok = classify_typical(ds, chi, t, T, V, delta, &table).typical();
        }
        if (ok)
            return {V, false};
    }
    return {v_hi, true};
}

}  // namespace mertens_ap
