#pragma once

#include <cstdint>
#include <vector>

#include "mertens_ap/characters.hpp"
#include "mertens_ap/special.hpp"

namespace mertens_ap {

enum class LMethod { hurwitz_euler_maclaurin, dirichlet_series };

struct LValueRequest {
    cplx s;
    DirichletCharacter chi;
    LMethod method = LMethod::hurwitz_euler_maclaurin;
    double tolerance = 1e-12;
};

struct LValue {
    cplx value;
    double error = 0.0;
    std::int64_t terms = 0;  // direct-sum length
};

LValue eval_L(const LValueRequest& req);
inline LValue eval_L(cplx s, const DirichletCharacter& chi, double tol = 1e-12)
{
    return eval_L({s, chi, LMethod::hurwitz_euler_maclaurin, tol});
}

// Π_{p|d} (1 - χ(p)p^{-s}).
cplx eval_l_d(cplx s, const DirichletCharacter& chi, std::int64_t d);

double digamma_real_part(cplx s);

// Evaluates L(σ+it, χ) for a family of characters of one modulus at fixed σ,
// sharing the direct sum across characters. Used inside quadrature loops.
class LineLSeries {
public:
    LineLSeries(std::vector<DirichletCharacter> chars, double sigma, double t_max, double tol);

    const std::vector<DirichletCharacter>& characters() const { return chars_; }
    double sigma() const { return sigma_; }

    // out[k] = L(σ+it, chars[k]); returns the remainder bound.
    double evaluate(double t, std::vector<cplx>& out) const;

private:
    std::int64_t terms_for(double t) const;

    std::vector<DirichletCharacter> chars_;
    std::int64_t r_ = 1;
    double sigma_ = 2.0;
    double tol_ = 1e-10;
    std::vector<std::int32_t> spf_;   // smallest prime factor
    std::vector<double> log_n_;
    std::vector<double> pow_n_;       // n^{-σ}
    std::vector<cplx> values_;        // values_[k*r + a] = χ_k(a)
};

}  // namespace mertens_ap
