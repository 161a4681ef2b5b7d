#pragma once

#include <cstdint>
#include <vector>

#include "mertens_ap/characters.hpp"
#include "mertens_ap/special.hpp"

namespace mertens_ap {

struct PerronValue {
    cplx value;
    double error = 0.0;
};

// A(x,χ) = (1/2πi) ∫ (x/d)^s / (s L(s,χ) l_d(s,χ)) ds over
// Re s = 1 + 1/log(x/d), |Im s| <= floor(x/d).
PerronValue perron_integral(double x, const DirichletCharacter& chi, std::int64_t d, unsigned threads = 1);

// The same integral for every character in a conjugation-closed family of one modulus.
std::vector<PerronValue> perron_integrals(double x, const std::vector<DirichletCharacter>& chars, std::int64_t d,
                                          unsigned threads = 1);

struct PerronCheck {
    std::int64_t x = 0;
    std::int64_t q = 1;
    std::int64_t a = 0;
    std::int64_t d = 1;
    std::int64_t b = 0;
    std::int64_t r = 1;
    double assembled = 0.0;
    double imag_residue = 0.0;  // should vanish up to quadrature error
    double quad_error = 0.0;
    std::int64_t sieve_value = 0;
    double bound = 0.0;  // C·log(x/d)
    bool passed = false;
};

// Reconstructs M(x;q,a) from characters mod q/d and compares with the sieve.
PerronCheck perron_check(std::int64_t x, std::int64_t q, std::int64_t a, double constant = 5.0,
                         unsigned threads = 1);

// All residues a mod q, sharing the integrals between residues with the same d.
std::vector<PerronCheck> perron_check_all(std::int64_t x, std::int64_t q, double constant = 5.0,
                                          unsigned threads = 1);

}  // namespace mertens_ap
