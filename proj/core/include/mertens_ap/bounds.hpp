#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mertens_ap/characters.hpp"
#include "mertens_ap/zeros.hpp"

namespace mertens_ap {

struct EnvelopeParams {
    double x = 16.0;
    std::int64_t q = 1;
    std::int64_t a = 0;
    double epsilon = 0.1;
};

struct Envelope {
    std::int64_t d = 1;
    double x_over_d = 16.0;
    double log_value = 0.0;
    double value = 0.0;        // exp(log_value), or +inf when >= 1e300
    bool linear = true;        // false when only the log form is meaningful
    bool degenerate = false;   // x/d clamped up to 16
};

// √(x/d)·exp((log(x/d))^{1/2}(loglog(x/d))^{3+ε}), computed in log space.
Envelope main_envelope(const EnvelopeParams& p);

struct ComparisonRow {
    std::int64_t x = 0;
    std::int64_t q = 1;
    std::int64_t a = 0;
    std::int64_t value = 0;  // M(x;q,a)
    Envelope envelope;
    double trivial = 0.0;    // x/q
    double gonek = 0.0;      // √x (logloglog x)^{5/4}, 0 where logloglog x < 0
    bool within = false;     // |M| <= min(envelope, x/q + 1)
};

std::vector<ComparisonRow> comparison_table(const std::vector<std::int64_t>& xs, std::int64_t q, std::int64_t a,
                                            double epsilon, unsigned threads = 1);

// The fixed grid used for reporting: x = 10^2..10^6 against a spread of (q,a).
std::vector<ComparisonRow> standard_comparison_table(double epsilon = 0.1, unsigned threads = 1);

// RHS - LHS of the first elementary inequality; throws DomainError outside its hypotheses.
double check_elem1(double V, std::int64_t q, double T);
// e^A A^C - (AV - V log V + C V loglog V); throws DomainError outside its hypotheses.
double check_elem2(double A, double C, double V);

struct LogLReport {
    double sigma = 0.0;
    double t = 0.0;
    double log_abs_L = 0.0;
    double L_error = 0.0;

    bool generic_defined = false;  // q|t| > e^e
    bool generic_regime = false;   // q|t| above the threshold: the bound is asserted
    double generic_rhs = 0.0;
    double generic_margin = 0.0;

    // Ratios of -log|L| to the shape of each big-O bound; reported only.
    double large_sigma_ratio = 0.0;
    double small_sigma_ratio = 0.0;
    double trivial_ratio = 0.0;
    double sigma0 = 0.0;

    double nearest_zero_distance = -1.0;  // when a dataset is supplied
};

LogLReport diagnostic_logL_bounds(const DirichletCharacter& chi, const ZeroDataset* ds, double sigma, double t,
                                  std::int64_t V, double delta, double regime_threshold = 1e3);

struct ScheduleSegment {
    std::int64_t k = 0;
    std::int64_t n_begin = 0;  // inclusive
    std::int64_t n_end = 0;    // exclusive
    std::int64_t V = 0;
    bool from_zeros = false;   // V came from a dataset scan rather than ceil(b)
};

struct ContourSchedule {
    std::int64_t K = 0;
    std::int64_t l = 0;
    bool constant_branch = false;  // q > exp(sqrt(log x))
    bool degenerate = false;       // l > K
    std::vector<double> T;         // T_k for l <= k <= K
    std::vector<ScheduleSegment> segments;
};

ContourSchedule contour_schedule(double x, std::int64_t q, const DirichletCharacter* chi, const ZeroDataset* ds,
                                 double delta, double c = 2.0, std::int64_t l_const = 10);

}  // namespace mertens_ap
