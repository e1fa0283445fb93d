// sextic: command-line front end. See README.md for the command list.

#include "sextic/cli.hpp"

#include "CLI11.hpp"

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>

namespace {

using sextic::cli::RunConfig;

template <class T>
void copy_if_set(const CLI::Option* opt, const T& value, std::optional<T>& dst)
{
    if (opt->count())
        dst = value;
}

} // namespace

int main(int argc, char** argv)
{
    namespace cli = sextic::cli;
    CLI::App app{"Exact computations for the simplest sextic Thue family"};
    app.require_subcommand(1);

    std::string m, n, a, b, x, y, z, lambda, poly, range, m_range, format = "text", out, cache, mutate;
    long bound = 0, interval = 50, stop_after = 0;
    unsigned jobs = 1;

    auto* form = app.add_subcommand("form", "Binary form F_m")->require_subcommand(1);
    auto* form_eval = form->add_subcommand("eval", "Evaluate F_m(x, y) and show the orbit of (x, y)");
    auto* polyc = app.add_subcommand("poly", "Polynomials over Q")->require_subcommand(1);
    auto* poly_factor = polyc->add_subcommand("factor", "Factor a polynomial (or f6_m with --m) over Q");
    poly_factor->add_option("poly", poly, "Polynomial in X, e.g. \"X^3 - 2*X + 1/2\"");
    app.add_subcommand("iso", "Decide whether f6_a and f6_b have the same splitting field");
    app.add_subcommand("intersect", "Degree and type of the intersection of two splitting fields");
    auto* thue = app.add_subcommand("thue", "Thue equations F_m(x, y) = lambda")->require_subcommand(1);
    auto* thue_solve = thue->add_subcommand("solve", "All solutions in a box for one lambda");
    auto* thue_verify = thue->add_subcommand("verify", "Check every divisor of 27(m^2+3m+9) over a box");
    auto* scanc = app.add_subcommand("scan", "Search integer pairs for field coincidences")->require_subcommand(1);
    auto* scan_cubic = scanc->add_subcommand("cubic", "Pairs with equal simplest cubic fields");
    auto* scan_sextic = scanc->add_subcommand("sextic", "Pairs with equal simplest sextic fields");
    auto* verify = app.add_subcommand("verify", "Built-in verification suites")->require_subcommand(1);
    auto* verify_ids = verify->add_subcommand("identities", "Polynomial identities and congruences");
    auto* verify_t2 = verify->add_subcommand("table2", "Factorizations of the resolvents at the known pairs");

    for (auto* sub : app.get_subcommands({}))
        sub->fallthrough();
    for (auto* leaf : {form_eval, poly_factor, thue_solve, thue_verify, scan_cubic, scan_sextic, verify_ids, verify_t2})
        leaf->fallthrough();

    auto* o_m = app.add_option("--m", m, "Family parameter (integer or p/q)");
    auto* o_n = app.add_option("--n", n, "Second family parameter");
    auto* o_a = app.add_option("--a", a, "First parameter (integer or p/q)");
    auto* o_b = app.add_option("--b", b, "Second parameter (integer or p/q)");
    auto* o_x = app.add_option("--x", x, "x coordinate");
    auto* o_y = app.add_option("--y", y, "y coordinate");
    auto* o_z = app.add_option("--z", z, "Build b from a and z (same field as a)");
    auto* o_lambda = app.add_option("--lambda", lambda, "Right-hand side of the Thue equation");
    auto* o_bound = app.add_option("--bound", bound, "Search box |x|, |y| <= B");
    auto* o_range = app.add_option("--range", range, "Scan range A..B");
    auto* o_mrange = app.add_option("--m-range", m_range, "Range of m, A..B");
    app.add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1u, 1024u));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    auto* o_out = app.add_option("--out", out, "Write output to a file");
    auto* o_cache = app.add_option("--cache-dir", cache, "Checkpoint directory (default: $CACHE_DIR)");
    app.add_option("--checkpoint-interval", interval, "Rows between checkpoint writes")->check(CLI::PositiveNumber);
    auto* o_stop = app.add_option("--stop-after-rows", stop_after, "Stop a scan after N rows")->group("");
    auto* o_mutate = app.add_option("--mutate", mutate, "Corrupt one identity on purpose")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : cli::kUsage;
    }

    RunConfig cfg;
    for (const auto* sub = app.get_subcommands().front(); sub; ) {
        cfg.command += (cfg.command.empty() ? "" : " ") + sub->get_name();
        const auto subs = sub->get_subcommands();
        sub = subs.empty() ? nullptr : subs.front();
    }
    copy_if_set(o_m, m, cfg.m);
    copy_if_set(o_n, n, cfg.n);
    copy_if_set(o_a, a, cfg.a);
    copy_if_set(o_b, b, cfg.b);
    copy_if_set(o_x, x, cfg.x);
    copy_if_set(o_y, y, cfg.y);
    copy_if_set(o_z, z, cfg.z);
    copy_if_set(o_lambda, lambda, cfg.lambda);
    copy_if_set(o_out, out, cfg.out);
    copy_if_set(o_cache, cache, cfg.cache_dir);
    copy_if_set(o_mutate, mutate, cfg.mutate);
    if (poly_factor->count("poly"))
        cfg.poly = poly;
    if (o_bound->count())
        cfg.bound = bound;
    if (o_stop->count())
        cfg.stop_after_rows = stop_after;
    cfg.jobs = jobs;
    cfg.checkpoint_interval = interval;

    try {
        cfg.format = cli::parse_format(format);
        if (o_range->count())
            cfg.range = cli::parse_range(range);
        if (o_mrange->count())
            cfg.m_range = cli::parse_range(m_range);

        std::ofstream file;
        std::ostream* os = &std::cout;
        if (cfg.out) {
            file.open(*cfg.out, std::ios::trunc);
            if (!file) {
                std::cerr << "error: cannot open " << *cfg.out << " for writing\n";
                return cli::kUsage;
            }
            os = &file;
        } else {
            const char* no_color = std::getenv("NO_COLOR");
            cfg.color = isatty(STDOUT_FILENO) && !(no_color && *no_color);
        }
        return cli::dispatch(cfg, *os);
    } catch (const cli::UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::kUsage;
    } catch (const cli::CheckpointError& e) {
        std::cerr << "checkpoint error: " << e.what() << '\n';
        return cli::kFault;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return cli::kFault;
    }
}
