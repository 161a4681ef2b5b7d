#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "mertens_ap/characters.hpp"
#include "mertens_ap/sieve.hpp"

namespace mertens_ap {

struct ZeroDataset {
    std::int64_t q = 1;
    std::string label = "1:";
    std::vector<double> ordinates;  // strictly increasing
    double gamma_max = 0.0;
    bool symmetric = false;  // only γ >= 0 stored; γ -> -γ implied
    std::string source;

    // All ordinates including mirrored negatives when symmetric.
    std::vector<double> signed_ordinates() const;
    // Ordinates in the open interval (lo, hi), signed.
    std::vector<double> ordinates_in(double lo, double hi) const;
};

ZeroDataset parse_zeros(std::istream& in, const std::string& origin = "<stream>");
ZeroDataset load_zeros(const std::string& path);
void write_zeros(std::ostream& out, const ZeroDataset& ds);

// Finds "<dir>/*.lzeros" whose header matches the character label.
ZeroDataset find_dataset(const std::string& dir, const std::string& label);

// Number of ordinates in [0, t].
std::int64_t count_zeros(const ZeroDataset& ds, double t);

// N(t+h) - N(t-h) - (h/π) log(qt/2π).
double window_deviation(const ZeroDataset& ds, double t, double h);

struct GoldstonGonekReport {
    double deviation = 0.0;
    double bound = 0.0;
    double margin = 0.0;
    bool in_regime = false;  // qt above the configured threshold
};

GoldstonGonekReport goldston_gonek_check(const ZeroDataset& ds, double t, double h, std::int64_t q,
                                         double slack = 0.5, double regime_threshold = 1e3);

struct PrimeSumWindow {
    double deviation = 0.0;
    double upper = 0.0;  // without the O(log Δ) term
    double lower = 0.0;
};

// Both sides of the zero-count/prime-sum comparison, for a diagnostic report.
PrimeSumWindow deviation_prime_sum_bound(const ZeroDataset& ds, const DirichletCharacter& chi,
                                         double t, double h, double delta);

struct RangeBounds {
    double a = 0.0;
    double b = 0.0;
};

RangeBounds range_bounds(double T, std::int64_t q);

struct TypicalityReport {
    double t = 0.0;
    double T = 0.0;
    std::int64_t V = 0;
    double delta = 1.0;
    double y = 0.0;
    double criterion_i_sup = 0.0;
    double criterion_i_margin = 0.0;
    std::int64_t criterion_ii_max = 0;
    double criterion_ii_margin = 0.0;
    std::int64_t criterion_iii_max = 0;
    double criterion_iii_margin = 0.0;

    bool typical() const
    {
        return criterion_i_margin >= 0.0 && criterion_ii_margin >= 0.0 && criterion_iii_margin >= 0.0;
    }
};

// Largest number of ordinates in a closed window of the given length inside
// (t-1, t+1); a window of length >= 2 counts the whole interval.
std::int64_t max_window_count(const std::vector<double>& inside, double length);

TypicalityReport classify_typical(const ZeroDataset& ds, const DirichletCharacter& chi, double t, double T,
                                  std::int64_t V, double delta, const SieveSegment* lambda_table = nullptr);

// Criterion i alone: certified sup over σ >= 1/2 of the smoothed prime sum.
double criterion_i_sup(const DirichletCharacter& primitive, double t, double y,
                       const SieveSegment* lambda_table = nullptr);

struct MinimalV {
    std::int64_t V = 0;
    bool fallback = false;  // no V up to ceil(b) passed on the whole grid
};

MinimalV minimal_typical_V(const ZeroDataset& ds, const DirichletCharacter& chi, std::int64_t n, double T,
                           double delta);

}  // namespace mertens_ap
