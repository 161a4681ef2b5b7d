#pragma once

#include <complex>

namespace mertens_ap {

using cplx = std::complex<double>;

// B_{2k} for k = 0..10.
double bernoulli_even(int k);

// ψ(z) = Γ'/Γ(z). Throws DomainError at nonpositive integers.
cplx digamma(cplx z);
// ψ'(z). Throws DomainError at nonpositive integers.
cplx trigamma(cplx z);

// (e^x - 1)/x, continuous through x = 0.
cplx exprel(cplx x);

// sin(πz)/(πz) with the value 1 at z = 0.
cplx sinc_pi(cplx z);

}  // namespace mertens_ap
