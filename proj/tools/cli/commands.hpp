#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "table.hpp"

namespace mertens_ap {
class DirichletCharacter;
struct ZeroDataset;
}  // namespace mertens_ap

namespace mertens_ap::cli {

struct Common {
    std::string format = "csv";
    std::string output;
    std::string data_dir;
    std::string zeros_file;  // overrides the dataset lookup
    unsigned threads = 1;
    std::uint64_t seed = 20240611;
    bool self_test = false;
};

// --data-dir, then MERTENS_AP_DATA, then the compiled default.
std::string resolve_data_dir(const Common& c);
ZeroDataset dataset_for(const Common& c, const DirichletCharacter& chi);

struct Result {
    Table table;
    nlohmann::ordered_json config = nlohmann::ordered_json::object();
};

struct MertensArgs {
    std::vector<std::int64_t> x;
};
Result run_mertens(const MertensArgs& a, const Common& c);

struct MertensApArgs {
    std::int64_t x = 0;
    std::int64_t q = 0;
    std::optional<std::int64_t> a;  // all residues when absent
    bool check_identity = false;
};
Result run_mertens_ap(const MertensApArgs& a, const Common& c);

struct CharactersArgs {
    std::int64_t q = 0;
    std::string chi;        // print values of one character
    std::int64_t values = 0;
};
Result run_characters(const CharactersArgs& a, const Common& c);

struct SelbergArgs {
    double h = 1.0;
    double delta = 2.0;
    std::int64_t samples = 10000;
    std::int64_t n_h = 10000;
};
Result run_selberg_check(const SelbergArgs& a, const Common& c);

struct ExplicitArgs {
    std::string chi;
    std::vector<double> t;
    double h = 1.0;
    double delta = 2.0;
    std::string sign = "both";
};
Result run_explicit_formula(const ExplicitArgs& a, const Common& c);

struct ZerosStatsArgs {
    std::string chi;
    std::vector<double> t;
    double h = 1.0;
    double delta = 1.0;
    double slack = 0.5;
    double threshold = 1e3;
};
Result run_zeros_stats(const ZerosStatsArgs& a, const Common& c);

struct TypicalityArgs {
    std::string chi;
    std::vector<double> t;        // explicit ordinates
    double T = 0.0;               // dyadic order of each t when 0
    std::int64_t V = 0;           // ceil(b(T,q)) when 0
    double delta = 1.0;
    std::vector<std::int64_t> n;  // minimal V on [n, n+1]
    bool zeros = false;           // every covered zero ordinate
};
Result run_typicality(const TypicalityArgs& a, const Common& c);

struct InequalitiesArgs {
    std::string which = "both";
    std::int64_t samples = 100000;
    // single evaluations
    std::optional<double> V;
    std::optional<std::int64_t> q;
    std::optional<double> T;
    std::optional<double> A;
    std::optional<double> C;
};
Result run_inequalities(const InequalitiesArgs& a, const Common& c);

struct EnvelopeArgs {
    std::vector<std::int64_t> x;
    std::optional<std::int64_t> q;
    std::int64_t a = 0;
    double epsilon = 0.1;
};
Result run_envelope_table(const EnvelopeArgs& a, const Common& c);

struct ContourArgs {
    double x = 0.0;
    std::int64_t q = 1;
    std::string chi;
    double delta = 1.0;
    double c = 2.0;
    std::int64_t l_const = 10;
};
Result run_contour_schedule(const ContourArgs& a, const Common& c);

struct LogLArgs {
    std::string chi;
    double sigma = 0.6;
    double t = 1000.0;
    std::int64_t V = 5;
    double delta = 1.0;
    double threshold = 1e3;
};
Result run_logl_bounds(const LogLArgs& a, const Common& c);

struct PerronArgs {
    std::int64_t x = 0;
    std::int64_t q = 0;
    std::optional<std::int64_t> a;
    double C = 5.0;
};
Result run_perron_check(const PerronArgs& a, const Common& c);

// Invariant suite for one module; rows are (check, passed, detail).
Result run_self_test(const std::string& module, const Common& c);

}  // namespace mertens_ap::cli
