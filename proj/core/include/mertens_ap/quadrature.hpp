#pragma once

#include <cmath>
#include <complex>
#include <type_traits>
#include <vector>

#include "mertens_ap/error.hpp"

namespace mertens_ap {

template <class T>
struct QuadResult {
    T value{};
    double error = 0.0;
    long evaluations = 0;
};

namespace detail {

inline constexpr double kGkNodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kKronrodWeights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double kGaussWeights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

template <class T>
double magnitude(const T& v)
{
    return std::abs(v);
}

}  // namespace detail

// One Gauss–Kronrod 7/15 panel; error is |K15 - G7|.
template <class F>
auto gk15(F&& f, double a, double b)
{
    using T = std::decay_t<decltype(f(a))>;
    const double c = 0.5 * (a + b);
    const double r = 0.5 * (b - a);
    T kron = detail::kKronrodWeights[7] * f(c);
    T gauss = detail::kGaussWeights[3] * (kron / detail::kKronrodWeights[7]);
    for (int i = 0; i < 7; ++i) {
        const double dx = r * detail::kGkNodes[i];
        T s = f(c - dx) + f(c + dx);
        kron += detail::kKronrodWeights[i] * s;
        if (i % 2 == 1)
            gauss += detail::kGaussWeights[i / 2] * s;
    }
    QuadResult<T> out;
    out.value = kron * r;
    out.error = detail::magnitude(T((kron - gauss) * r));
    out.evaluations = 15;
    return out;
}

// Adaptive bisection until each panel's error is below its share of tol.
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double tol, int max_depth = 30)
{
    auto whole = gk15(f, a, b);
    if (whole.error <= tol || max_depth == 0 || !(std::isfinite(whole.error)))
        return whole;
    const double m = 0.5 * (a + b);
    auto left = integrate_adaptive(f, a, m, 0.5 * tol, max_depth - 1);
    auto right = integrate_adaptive(f, m, b, 0.5 * tol, max_depth - 1);
    left.value += right.value;
    left.error += right.error;
    left.evaluations += right.evaluations + whole.evaluations;
    return left;
}

// Splits [a,b] into panels no wider than `width` (respecting `breaks`) and
// integrates each adaptively to `panel_tol`.
template <class F>
auto integrate_panels(F&& f, double a, double b, double width, double panel_tol,
                      std::vector<double> breaks = {})
{
    using T = std::decay_t<decltype(f(a))>;
    QuadResult<T> total;
    std::vector<double> cuts{a};
    breaks.push_back(b);
    for (double br : breaks) {
        if (br <= cuts.back() || br > b)
            continue;
        const double lo = cuts.back();
        const auto n = static_cast<long>(std::ceil((br - lo) / width));
        for (long i = 1; i < n; ++i)
            cuts.push_back(lo + (br - lo) * static_cast<double>(i) / static_cast<double>(n));
        cuts.push_back(br);
    }
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        auto part = integrate_adaptive(f, cuts[i], cuts[i + 1], panel_tol);
        total.value += part.value;
        total.error += part.error;
        total.evaluations += part.evaluations;
    }
    return total;
}

}  // namespace mertens_ap
