#include <fstream>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "mertens_ap/error.hpp"
#include "mertens_ap/parallel.hpp"

using namespace mertens_ap;
using namespace mertens_ap::cli;

namespace {

void add_common(CLI::App* sub, Common& c)
{
    sub->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--output,-o", c.output, "write to a file instead of stdout");
    sub->add_option("--data-dir", c.data_dir, "directory of .lzeros files");
    sub->add_option("--zeros", c.zeros_file, "a single .lzeros file to use instead of the data directory");
    sub->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", c.seed, "seed for randomized sweeps");
    sub->add_flag("--self-test", c.self_test, "run the module's invariant suite");
}

void emit(const Result& r, const Common& c)
{
    std::ofstream file;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file)
            throw ValidationError("cannot open " + c.output);
    }
    std::ostream& out = c.output.empty() ? std::cout : file;
    if (c.format == "json")
        write_json(out, r.table, r.config);
    else
        write_csv(out, r.table);
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Moebius sums over arithmetic progressions and numerical checks of their analytic bounds"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);

    Common common;
    common.threads = default_thread_count();

    std::function<Result()> action;
    std::string module;
    auto sub = [&](const std::string& name, const std::string& help, const std::string& mod) {
        auto* s = app.add_subcommand(name, help);
        add_common(s, common);
        s->preparse_callback([&module, mod](std::size_t) { module = mod; });
        return s;
    };

    MertensArgs mertens_args;
    auto* s = sub("mertens", "M(x)", "sieve");
    s->add_option("--x", mertens_args.x, "one or more x");
    s->final_callback([&] { action = [&] { return run_mertens(mertens_args, common); }; });

    MertensApArgs ap_args;
    s = sub("mertens-ap", "M(x;q,a), every residue when --a is absent", "sieve");
    s->add_option("--x", ap_args.x);
    s->add_option("--q", ap_args.q);
    s->add_option("--a", ap_args.a);
    s->add_flag("--check-identity", ap_args.check_identity, "also evaluate the reduction identity");
    s->final_callback([&] { action = [&] { return run_mertens_ap(ap_args, common); }; });

    CharactersArgs char_args;
    s = sub("characters", "list the characters mod q, or values of one character", "characters");
    s->add_option("--q", char_args.q);
    s->add_option("--chi", char_args.chi, "label q:e1,...,ek");
    s->add_option("--values", char_args.values, "number of values to print with --chi");
    s->final_callback([&] { action = [&] { return run_characters(char_args, common); }; });

    SelbergArgs sel_args;
    s = sub("selberg-check", "sandwich, mass and band-limit checks of the majorant/minorant", "selberg");
    s->add_option("--h", sel_args.h);
    s->add_option("--delta", sel_args.delta);
    s->add_option("--samples", sel_args.samples);
    s->add_option("--n-h", sel_args.n_h, "series cutoff for H");
    s->final_callback([&] { action = [&] { return run_selberg_check(sel_args, common); }; });

    ExplicitArgs ef_args;
    auto explicit_options = [&](CLI::App* e) {
        e->add_option("--chi", ef_args.chi, "primitive character label");
        e->add_option("--t", ef_args.t, "ordinates");
        e->add_option("--h", ef_args.h);
        e->add_option("--delta", ef_args.delta);
        e->add_option("--sign", ef_args.sign, "plus, minus or both");
        e->final_callback([&] { action = [&] { return run_explicit_formula(ef_args, common); }; });
    };
    explicit_options(sub("explicit-formula", "both sides of the explicit formula", "analytic"));
    auto* verify = app.add_subcommand("verify", "alias group for verification commands");
    verify->require_subcommand(1);
    {
        auto* e = verify->add_subcommand("explicit-formula", "same as the top-level explicit-formula");
        add_common(e, common);
        e->preparse_callback([&module](std::size_t) { module = "analytic"; });
        explicit_options(e);
    }

    ZerosStatsArgs zs_args;
    s = sub("zeros-stats", "zero counts and window deviations", "zeros");
    s->add_option("--chi", zs_args.chi);
    s->add_option("--t", zs_args.t);
    s->add_option("--h", zs_args.h);
    s->add_option("--delta", zs_args.delta, "bandwidth of the prime-sum bound");
    s->add_option("--slack", zs_args.slack);
    s->add_option("--threshold", zs_args.threshold, "qt above which the large-t regime is flagged");
    s->final_callback([&] { action = [&] { return run_zeros_stats(zs_args, common); }; });

    TypicalityArgs ty_args;
    s = sub("typicality", "V-typicality classification", "zeros");
    s->add_option("--chi", ty_args.chi);
    s->add_option("--t", ty_args.t);
    s->add_option("--T", ty_args.T, "order; dyadic order of t when omitted");
    s->add_option("--V", ty_args.V, "ceil(b(T,q)) when omitted");
    s->add_option("--delta", ty_args.delta);
    s->add_option("--n", ty_args.n, "report the smallest typical V on [n, n+1]");
    s->add_flag("--all-zeros", ty_args.zeros, "classify every covered zero ordinate");
    s->final_callback([&] { action = [&] { return run_typicality(ty_args, common); }; });

    InequalitiesArgs in_args;
    LogLArgs logl_args;
    s = sub("inequalities", "elementary inequalities, or log|L| lower bounds with --which logl", "bounds");
    s->add_option("--which", in_args.which, "elem1, elem2, both or logl");
    s->add_option("--samples", in_args.samples);
    s->add_option("--V", in_args.V);
    s->add_option("--q", in_args.q);
    s->add_option("--T", in_args.T);
    s->add_option("--A", in_args.A);
    s->add_option("--C", in_args.C);
    s->add_option("--chi", logl_args.chi);
    s->add_option("--sigma", logl_args.sigma);
    s->add_option("--t", logl_args.t);
    s->add_option("--delta", logl_args.delta);
    s->add_option("--threshold", logl_args.threshold);
    s->final_callback([&] {
        action = [&] {
            if (in_args.which == "logl") {
                if (in_args.V)
                    logl_args.V = static_cast<std::int64_t>(*in_args.V);
                return run_logl_bounds(logl_args, common);
            }
            return run_inequalities(in_args, common);
        };
    });

    EnvelopeArgs env_args;
    s = sub("envelope-table", "M(x;q,a) against the main envelope; the standard table when no --x/--q", "bounds");
    s->add_option("--x", env_args.x);
    s->add_option("--q", env_args.q);
    s->add_option("--a", env_args.a);
    s->add_option("--epsilon", env_args.epsilon);
    s->final_callback([&] { action = [&] { return run_envelope_table(env_args, common); }; });

    ContourArgs co_args;
    s = sub("contour-schedule", "dyadic segments and V_n of the contour", "bounds");
    s->add_option("--x", co_args.x);
    s->add_option("--q", co_args.q);
    s->add_option("--chi", co_args.chi, "use this character's zeros for V_n when they cover the range");
    s->add_option("--delta", co_args.delta);
    s->add_option("--c", co_args.c, "exponent in l");
    s->add_option("--l-const", co_args.l_const, "l when q > exp(sqrt(log x))");
    s->final_callback([&] { action = [&] { return run_contour_schedule(co_args, common); }; });

    PerronArgs pe_args;
    s = sub("perron-check", "M(x;q,a) rebuilt from Perron integrals", "analytic");
    s->add_option("--x", pe_args.x);
    s->add_option("--q", pe_args.q);
    s->add_option("--a", pe_args.a);
    s->add_option("--C", pe_args.C, "tolerance constant in C log(x/d)");
    s->final_callback([&] { action = [&] { return run_perron_check(pe_args, common); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (common.self_test) {
            const auto r = run_self_test(module, common);
            emit(r, common);
            for (const auto& row : r.table.rows)
                if (!std::get<bool>(row[2]))
                    return 1;
            return 0;
        }
        emit(action(), common);
        return 0;
    } catch (const CoverageError& e) {
        std::cerr << "coverage error: " << e.what() << " (zeros needed up to " << e.required_gamma_max() << ")\n";
        return 3;
    } catch (const ToleranceError& e) {
        std::cerr << "tolerance error: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}
