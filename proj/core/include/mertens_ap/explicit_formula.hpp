#pragma once

#include <cstdint>
#include <string>

#include "mertens_ap/characters.hpp"
#include "mertens_ap/selberg.hpp"
#include "mertens_ap/zeros.hpp"

namespace mertens_ap {

struct ExplicitFormulaReport {
    double t = 0.0;
    SelbergPair pair;
    Sign sign = Sign::plus;
    std::string label;
    int kappa = 0;

    double lhs = 0.0;              // Σ F(γ - t) over the dataset
    std::int64_t zeros_used = 0;

    double conductor_term = 0.0;   // (1/2π) F̂(0) log(q/π)
    double pole_term = 0.0;        // only for ζ: F(i/2 - t) + F(-i/2 - t)
    double gamma_term = 0.0;       // (1/2π) ∫ F(u - t) Re ψ((1/2+κ+iu)/2) du
    double prime_term = 0.0;       // -(1/π) Σ Λ(n) n^{-1/2} F̂(log n/2π) Re χ(n) n^{-it}
    double rhs = 0.0;
    std::int64_t prime_terms = 0;

    double zero_tail_bound = 0.0;
    double gamma_tail_bound = 0.0;
    double quadrature_error = 0.0;
    double truncation_error_estimate = 0.0;

    // The single (1-κ)F(1/(2i) - t) term, for comparison.
    double single_pole_term = 0.0;

    double difference() const { return lhs - rhs; }
    bool passed() const { return std::abs(lhs - rhs) <= truncation_error_estimate; }
};

ExplicitFormulaReport verify_explicit_formula(const DirichletCharacter& chi, const ZeroDataset& zeros, double t,
                                              const SelbergPair& pair, Sign sign = Sign::plus);

}  // namespace mertens_ap
