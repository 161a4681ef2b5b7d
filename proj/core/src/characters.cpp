#include "mertens_ap/characters.hpp"

#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "mertens_ap/arith.hpp"
#include "mertens_ap/error.hpp"

namespace mertens_ap {

namespace {

std::int64_t least_primitive_root(std::int64_t p, std::int64_t pk)
{
    const std::int64_t phi = pk / p * (p - 1);
    auto factors = factorize(phi);
    for (std::int64_t g = 2; g < pk; ++g) {
        if (g % p == 0)
            continue;
        bool ok = true;
        for (auto [r, e] : factors)
            if (pow_mod(g, phi / r, pk) == 1) {
                ok = false;
                break;
            }
        if (ok)
            return g;
    }
    return 1;  // only reached for pk = 2
}

GroupComponent cyclic_component(std::int64_t p, std::int64_t pk, std::int64_t g, std::int64_t order)
{
    GroupComponent c;
    c.p = p;
    c.modulus = pk;
    c.generator = g;
    c.order = order;
    c.dlog.assign(static_cast<std::size_t>(pk), -1);
    std::int64_t x = 1;
    for (std::int64_t j = 0; j < order; ++j) {
        c.dlog[static_cast<std::size_t>(x)] = static_cast<std::int32_t>(j);
        x = x * g % pk;
    }
    return c;
}

std::shared_ptr<UnitGroup> build_group(std::int64_t q)
{
    auto grp = std::make_shared<UnitGroup>();
    grp->q = q;
    grp->phi = euler_phi(q);
    for (auto [p, k] : factorize(q)) {
        std::int64_t pk = 1;
        for (int i = 0; i < k; ++i)
            pk *= p;
        if (p != 2) {
            grp->components.push_back(
                cyclic_component(p, pk, least_primitive_root(p, pk), pk / p * (p - 1)));
        }
        else if (k == 2) {
            grp->components.push_back(cyclic_component(2, 4, 3, 2));
        }
        else if (k >= 3) {
            GroupComponent minus;
            minus.p = 2;
            minus.modulus = pk;
            minus.generator = pk - 1;
            minus.order = 2;
            minus.dlog.assign(static_cast<std::size_t>(pk), -1);
            GroupComponent five;
            five.p = 2;
            five.modulus = pk;
            five.generator = 5;
            five.order = pk / 4;
            five.dlog.assign(static_cast<std::size_t>(pk), -1);
            std::int64_t x = 1;
            for (std::int64_t j = 0; j < five.order; ++j) {
                auto i = static_cast<std::size_t>(x);
                auto neg = static_cast<std::size_t>(pk - x);
                five.dlog[i] = five.dlog[neg] = static_cast<std::int32_t>(j);
                minus.dlog[i] = 0;
                minus.dlog[neg] = 1;
                x = x * 5 % pk;
            }
            grp->components.push_back(std::move(minus));
            grp->components.push_back(std::move(five));
        }
    }
    grp->exponent = 1;
    for (const auto& c : grp->components)
        grp->exponent = lcm(grp->exponent, c.order);
    return grp;
}

std::int64_t pow_int(std::int64_t p, int k)
{
    std::int64_t r = 1;
    while (k-- > 0)
        r *= p;
    return r;
}

int valuation(std::int64_t n, std::int64_t p)
{
    int v = 0;
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    return v;
}

std::mutex g_cyclotomic_mutex;
std::map<std::int64_t, std::vector<std::int64_t>> g_cyclotomic;

// Φ_E, coefficients low to high. Caller holds g_cyclotomic_mutex.
const std::vector<std::int64_t>& cyclotomic_locked(std::int64_t e)
{
    if (auto it = g_cyclotomic.find(e); it != g_cyclotomic.end())
        return it->second;
    std::vector<std::int64_t> poly(static_cast<std::size_t>(e + 1), 0);
    poly[0] = -1;
    poly[static_cast<std::size_t>(e)] = 1;
    for (std::int64_t d = 1; d < e; ++d) {
        if (e % d != 0)
            continue;
        const auto& div = cyclotomic_locked(d);
        const std::size_t deg = div.size() - 1;
        std::vector<std::int64_t> quot(poly.size() - deg, 0);
        for (std::size_t i = poly.size() - 1;; --i) {
            std::int64_t c = poly[i];
            quot[i - deg] = c;
            for (std::size_t j = 0; j <= deg; ++j)
                poly[i - deg + j] -= c * div[j];
            if (i == deg)
                break;
        }
        poly = std::move(quot);
    }
    return g_cyclotomic[e] = std::move(poly);
}

std::vector<std::int64_t> cyclotomic(std::int64_t e)
{
    std::lock_guard lock(g_cyclotomic_mutex);
    return cyclotomic_locked(e);
}

}  // namespace

bool UnitGroup::coordinates(std::int64_t n, std::vector<std::int64_t>& out) const
{
    out.resize(components.size());
    if (q > 1 && gcd(mod_floor(n, q), q) != 1)
        return false;
    for (std::size_t j = 0; j < components.size(); ++j) {
        const auto& c = components[j];
        out[j] = c.dlog[static_cast<std::size_t>(mod_floor(n, c.modulus))];
    }
    return true;
}

std::shared_ptr<const UnitGroup> unit_group(std::int64_t q)
{
    if (q < 1)
        throw DomainError("modulus must be >= 1");
    static std::mutex mutex;
    static std::map<std::int64_t, std::shared_ptr<const UnitGroup>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[q];
    if (!slot)
        slot = build_group(q);
    return slot;
}

DirichletCharacter::DirichletCharacter(std::shared_ptr<const UnitGroup> group, std::vector<std::int64_t> label)
    : group_(std::move(group)), label_(std::move(label))
{
    const auto& comps = group_->components;
    if (label_.size() != comps.size())
        throw DomainError("character label has wrong length for modulus " + std::to_string(group_->q));
    order_ = 1;
    conductor_ = 1;
    std::int64_t two_minus = 0, two_five_order = 1;
    for (std::size_t j = 0; j < comps.size(); ++j) {
        const auto& c = comps[j];
        label_[j] = mod_floor(label_[j], c.order);
        std::int64_t local = c.order / gcd(label_[j], c.order);
        order_ = lcm(order_, local);
        if (c.p != 2) {
            if (local > 1)
                conductor_ *= pow_int(c.p, 1 + valuation(local, c.p));
        }
        else if (c.generator == 5) {
            two_five_order = local;
        }
        else {
            two_minus = label_[j];
        }
    }
    if (two_five_order > 1)
        conductor_ *= pow_int(2, 2 + valuation(two_five_order, 2));
    else if (two_minus != 0)
        conductor_ *= 4;
    kappa_ = exponent(-1) == 0 ? 0 : 1;
}

std::string DirichletCharacter::label_string() const
{
    std::ostringstream os;
    os << group_->q << ':';
    for (std::size_t j = 0; j < label_.size(); ++j)
        os << (j ? "," : "") << label_[j];
    return os.str();
}

std::int64_t DirichletCharacter::exponent_over_group(std::int64_t n) const
{
    thread_local std::vector<std::int64_t> coords;
    if (!group_->coordinates(n, coords))
        return -1;
    const std::int64_t e = group_->exponent;
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < coords.size(); ++j)
        acc = (acc + label_[j] * coords[j] % e * (e / group_->components[j].order)) % e;
    return acc;
}

std::int64_t DirichletCharacter::exponent(std::int64_t n) const
{
    std::int64_t eg = exponent_over_group(n);
    if (eg < 0)
        return -1;
    return eg / (group_->exponent / order_);
}

std::complex<double> DirichletCharacter::value(std::int64_t n) const
{
    std::int64_t e = exponent(n);
    if (e < 0)
        return 0.0;
    if (e == 0)
        return 1.0;
    if (2 * e == order_)
        return -1.0;
    if (4 * e == order_)
        return {0.0, 1.0};
    if (4 * e == 3 * order_)
        return {0.0, -1.0};
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(order_));
}

std::vector<DirichletCharacter> character_group(std::int64_t q, std::int64_t cap)
{
    if (q < 1)
        throw DomainError("modulus must be >= 1");
    if (q > cap)
        throw SizeError("modulus " + std::to_string(q) + " exceeds character cap " + std::to_string(cap));
    auto grp = unit_group(q);
    const auto& comps = grp->components;
    std::vector<DirichletCharacter> out;
    out.reserve(static_cast<std::size_t>(grp->phi));
    std::vector<std::int64_t> label(comps.size(), 0);
    for (;;) {
        out.emplace_back(grp, label);
        std::size_t j = comps.size();
        while (j > 0) {
            --j;
            if (++label[j] < comps[j].order)
                break;
            label[j] = 0;
            if (j == 0) {
                j = comps.size() + 1;
                break;
            }
        }
        if (comps.empty() || j == comps.size() + 1)
            break;
    }
    return out;
}

DirichletCharacter character_from_label(const std::string& text)
{
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw DomainError("character label must look like q:e1,...,ek");
    std::int64_t q = 0;
    std::vector<std::int64_t> label;
    try {
        std::size_t used = 0;
        q = std::stoll(text.substr(0, colon), &used);
        if (used != colon)
            throw DomainError("bad modulus in character label '" + text + "'");
        std::string rest = text.substr(colon + 1);
        std::stringstream ss(rest);
        std::string item;
        while (std::getline(ss, item, ','))
            label.push_back(std::stoll(item));
    }
    catch (const std::logic_error&) {
        throw DomainError("cannot parse character label '" + text + "'");
    }
    auto grp = unit_group(q);
    if (label.size() != grp->components.size())
        throw DomainError("character label '" + text + "' needs " +
                          std::to_string(grp->components.size()) + " exponents");
    for (std::size_t j = 0; j < label.size(); ++j)
        if (label[j] < 0 || label[j] >= grp->components[j].order)
            throw DomainError("exponent out of range in character label '" + text + "'");
    return DirichletCharacter(grp, label);
}

DirichletCharacter inducing_primitive(const DirichletCharacter& chi)
{
    if (chi.is_primitive())
        return chi;
    const std::int64_t q = chi.modulus();
    const std::int64_t q1 = chi.conductor();
    auto g1 = unit_group(q1);
    std::vector<std::int64_t> label;
    for (const auto& c : g1->components) {
        // Full power of c.p dividing q.
        std::int64_t pk = 1;
        while (q % (pk * c.p) == 0)
            pk *= c.p;
        const std::int64_t rest = q / pk;
        std::int64_t n = c.generator;
        if (rest > 1) {
            std::int64_t t = mod_floor((1 - c.generator) % rest * inverse_mod(pk % rest, rest), rest);
            n = c.generator + pk * t;
        }
        const std::int64_t ex = chi.exponent(n);
        if ((ex * c.order) % chi.order() != 0)
            throw Error("inducing_primitive: inconsistent conductor computation");
        label.push_back(ex * c.order / chi.order());
    }
    return DirichletCharacter(g1, label);
}

std::int64_t exact_root_sum(const std::vector<std::int64_t>& histogram)
{
    const auto e = static_cast<std::int64_t>(histogram.size());
    if (e == 0)
        return 0;
    if (e == 1)
        return histogram[0];
    const auto phi = cyclotomic(e);
    const std::size_t deg = phi.size() - 1;
    std::vector<std::int64_t> poly = histogram;
    for (std::size_t i = poly.size() - 1; i >= deg; --i) {
        std::int64_t c = poly[i];
        if (c != 0)
            for (std::size_t j = 0; j <= deg; ++j)
                poly[i - deg + j] -= c * phi[j];
        if (i == deg)
            break;
    }
    for (std::size_t i = 1; i < deg; ++i)
        if (poly[i] != 0)
            throw ValidationError("root-of-unity sum is not rational");
    return poly[0];
}

std::complex<double> orthogonality_sum(std::int64_t q, std::int64_t n, std::int64_t a)
{
    if (gcd(mod_floor(a, q), q) != 1)
        throw DomainError("orthogonality_sum requires gcd(a,q) = 1");
    std::complex<double> acc = 0.0;
    for (const auto& chi : character_group(q))
        acc += chi.value(n) * std::conj(chi.value(a));
    return acc / static_cast<double>(euler_phi(q));
}

std::int64_t orthogonality_sum_exact(std::int64_t q, std::int64_t n, std::int64_t a)
{
    auto grp = unit_group(q);
    std::vector<std::int64_t> ln, la;
    if (!grp->coordinates(a, la))
        throw DomainError("orthogonality_sum requires gcd(a,q) = 1");
    if (!grp->coordinates(n, ln))
        return 0;
    // Σ over all labels factors over the components: convolve one cyclic
    // factor at a time into a histogram over Z/E.
    const std::int64_t e = grp->exponent;
    std::vector<std::int64_t> hist(static_cast<std::size_t>(e), 0), next;
    hist[0] = 1;
    for (std::size_t j = 0; j < ln.size(); ++j) {
        const auto& c = grp->components[j];
        const std::int64_t step = mod_floor(ln[j] - la[j], c.order) * (e / c.order) % e;
        next.assign(hist.size(), 0);
        for (std::int64_t k = 0; k < e; ++k) {
            if (hist[static_cast<std::size_t>(k)] == 0)
                continue;
            std::int64_t pos = k;
            for (std::int64_t lab = 0; lab < c.order; ++lab) {
                next[static_cast<std::size_t>(pos)] += hist[static_cast<std::size_t>(k)];
                pos = (pos + step) % e;
            }
        }
        hist.swap(next);
    }
    return exact_root_sum(hist);
}

std::int64_t character_inner_product_exact(const DirichletCharacter& chi, const DirichletCharacter& psi)
{
    if (chi.modulus() != psi.modulus())
        throw DomainError("characters must share a modulus");
    const std::int64_t q = chi.modulus();
    const std::int64_t e = chi.group().exponent;
    std::vector<std::int64_t> hist(static_cast<std::size_t>(e), 0);
    for (std::int64_t n = 0; n < q; ++n) {
        std::int64_t x = chi.exponent_over_group(n);
        if (x < 0)
            continue;
        std::int64_t y = psi.exponent_over_group(n);
        ++hist[static_cast<std::size_t>(mod_floor(x - y, e))];
    }
    return exact_root_sum(hist);
}

}  // namespace mertens_ap
