#include "CLI11.hpp"

#include "torcount/local_densities.hpp"
#include "torcount/predict.hpp"
#include "torcount/reporting.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using namespace torcount;

int default_threads() {
    const char* e = std::getenv("TORCOUNT_THREADS");
    if (!e) return 1;
    int v = std::atoi(e);
    return v >= 1 ? v : 1;
}

struct CommonOpts {
    long n = 2;
    std::string boundary;
    std::string l1 = "1";
    std::string l2 = "1";
    std::string output = "json";
    int threads = default_threads();
    std::uint64_t seed = 12345;
    long long work_budget = 1'000'000'000;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_polarization,
                bool boundary_required = true) {
    cmd->add_option("--n", o.n, "family parameter, >= 2")->required();
    auto* b = cmd->add_option("--boundary", o.boundary, "boundary divisor: w or wz");
    if (boundary_required) b->required();
    if (with_polarization) {
        cmd->add_option("--l1", o.l1, "polarization component l1 (rational, default 1)");
        cmd->add_option("--l2", o.l2, "polarization component l2 (rational, default 1)");
    }
    cmd->add_option("--output", o.output, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--threads", o.threads, "worker threads (env TORCOUNT_THREADS)");
    cmd->add_option("--seed", o.seed, "Monte Carlo seed");
    cmd->add_option("--work-budget", o.work_budget, "abort the naive scan beyond this");
}

Setup make_setup(const CommonOpts& o) {
    return Setup(o.n, parse_boundary(o.boundary), parse_rational(o.l1),
                 parse_rational(o.l2));
}

OutputFormat format_of(const CommonOpts& o) {
    return o.output == "csv" ? OutputFormat::CSV : OutputFormat::JSON;
}

Int parse_int(const std::string& text, const char* what) {
    try {
        std::size_t epos = text.find_first_of("eE");
        if (epos == std::string::npos) return Int(text);
        // integer scientific notation: 1e6 = 1000000
        Int mant(text.substr(0, epos));
        std::string exp = text.substr(epos + 1);
        if (exp.empty() || exp.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad exponent");
        return mant * ipow(Int(10), std::stoul(exp));
    } catch (const std::exception&) {
        throw std::invalid_argument(std::string(what) + " is not an integer: " + text);
    }
}

std::vector<Int> parse_int_list(const std::string& text, const char* what) {
    std::vector<Int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        out.push_back(parse_int(text.substr(pos, comma - pos), what));
        pos = comma + 1;
    }
    if (out.empty()) throw std::invalid_argument(std::string(what) + " is empty");
    return out;
}

FiberKey parse_fiber(const std::string& text) {
    std::size_t c1 = text.find(':');
    std::size_t c2 = c1 == std::string::npos ? std::string::npos : text.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos ||
        text.find(':', c2 + 1) != std::string::npos)
        throw std::invalid_argument("fiber key must look like a:c:z, got " + text);
    return FiberKey{parse_int(text.substr(0, c1), "fiber a"),
                    parse_int(text.substr(c1 + 1, c2 - c1 - 1), "fiber c"),
                    parse_int(text.substr(c2 + 1), "fiber z")};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"height-count verification for a family of spherical threefolds"};
    app.require_subcommand(1);

    CommonOpts o;
    std::string B_text;
    std::string B_list_text;
    bool use_naive = false;
    long p_max = 11;
    std::vector<std::string> fiber_texts;

    CLI::App* cmd_count = app.add_subcommand("count", "exact count of height <= B points");
    add_common(cmd_count, o, true);
    cmd_count->add_option("--B", B_text, "height bound")->required();
    cmd_count->add_flag("--naive", use_naive, "direct scan instead of the cell formula");

    CLI::App* cmd_constants =
        app.add_subcommand("constants", "invariants and the predicted leading constant");
    add_common(cmd_constants, o, true);

    CLI::App* cmd_compare =
        app.add_subcommand("compare", "exact counts against the prediction");
    add_common(cmd_compare, o, true);
    cmd_compare->add_option("--B-list", B_list_text, "comma-separated height bounds")
        ->required();

    CLI::App* cmd_fp = app.add_subcommand("fp-check", "local densities at small primes");
    add_common(cmd_fp, o, false, false); // omitting --boundary reports both
    cmd_fp->add_option("--p-max", p_max, "largest prime to include");

    CLI::App* cmd_fiber = app.add_subcommand("fiber", "per-fiber counts against V' B^(1/l2)");
    add_common(cmd_fiber, o, true);
    cmd_fiber->add_option("--B", B_text, "height bound")->required();
    cmd_fiber->add_option("--fiber", fiber_texts, "fiber key a:c:z (repeatable)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    auto started = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (cmd_count->parsed()) {
            Setup s = make_setup(o);
            Int B = parse_int(B_text, "--B");
            CountOptions copt;
            copt.threads = o.threads;
            copt.work_budget = o.work_budget;
            CountResult r = use_naive ? naive_count(s, B, copt) : enumerate_count(s, B, copt);
            std::cout << count_report(s, B, r, format_of(o));
        } else if (cmd_constants->parsed()) {
            Setup s = make_setup(o);
            PredictOptions popt;
            popt.quad.threads = o.threads;
            popt.quad.seed = o.seed;
            Prediction p = leading_constant(s, popt);
            std::cout << constants_report(s, p, format_of(o));
        } else if (cmd_compare->parsed()) {
            Setup s = make_setup(o);
            std::vector<Int> Bs = parse_int_list(B_list_text, "--B-list");
            PredictOptions popt;
            popt.quad.threads = o.threads;
            popt.quad.seed = o.seed;
            CountOptions copt;
            copt.threads = o.threads;
            copt.work_budget = o.work_budget;
            std::cout << compare_report(s, compare(s, Bs, popt, copt), format_of(o));
        } else if (cmd_fp->parsed()) {
            if (o.n < 2) throw std::invalid_argument("family parameter n must be >= 2");
            std::vector<Boundary> bs;
            if (o.boundary.empty())
                bs = {Boundary::DW, Boundary::DW_DZ};
            else
                bs = {parse_boundary(o.boundary)};
            std::vector<std::pair<std::string, LocalDensity>> rows;
            for (long p : primes_upto(p_max))
                for (Boundary b : bs)
                    rows.emplace_back(boundary_str(b), local_density(o.n, b, p));
            std::cout << fp_report(rows, format_of(o));
        } else if (cmd_fiber->parsed()) {
            Setup s = make_setup(o);
            Int B = parse_int(B_text, "--B");
            std::vector<FiberKey> keys;
            for (const std::string& t : fiber_texts) keys.push_back(parse_fiber(t));
            std::cout << fiber_rows_report(s, B, fiber_report(s, keys, B), format_of(o));
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        rc = 1;
    }

    std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
    std::cerr << "elapsed_seconds " << real_str(sig12(elapsed.count())) << "\n";
    return rc;
}
