#pragma once

#include <cstdint>
#include <vector>

#include "mertens_ap/special.hpp"

namespace mertens_ap {

enum class Sign { plus, minus };

inline double sign_factor(Sign s) { return s == Sign::plus ? 1.0 : -1.0; }

struct SelbergPair {
    double h = 1.0;
    double delta = 2.0;
    std::int64_t n_h = 10'000;  // cutoff for the series form of H

    void validate() const;
};

struct FourierValue {
    double value = 0.0;
    double error = 0.0;
};

cplx kernel_K(cplx z);

// Closed form through the trigamma function; exact at integers.
cplx beurling_H(cplx z);
// The defining series truncated at |n| <= n_terms plus an integral tail.
cplx beurling_H_series(cplx z, std::int64_t n_terms);
// Bound on the neglected part of beurling_H_series.
double beurling_H_series_tail_bound(cplx z, std::int64_t n_terms);

cplx evaluate_F(const SelbergPair& pair, Sign sign, cplx z);
double evaluate_F(const SelbergPair& pair, Sign sign, double u);

double indicator(const SelbergPair& pair, double u);

// Adaptive quadrature of ∫F(u)e^{-2πixu}du with error estimate.
FourierValue fourier_F(const SelbergPair& pair, Sign sign, double x);
// Closed form of the same transform, zero for |x| >= Δ.
double fourier_F_closed(const SelbergPair& pair, Sign sign, double x);

// Quadrature of ∫|F(u) - χ(u)|du over the real line.
FourierValue l1_mass(const SelbergPair& pair, Sign sign);

// Points where F- > χ or F+ < χ beyond roundoff.
std::int64_t sandwich_violations(const SelbergPair& pair, const std::vector<double>& samples);

// max |F(z)|(Δ|z|)^2 e^{-2πΔ|y|} over the samples with |z| >= 2h.
double fit_decay_constant(const SelbergPair& pair, Sign sign, const std::vector<cplx>& samples);

}  // namespace mertens_ap
