#include <CLI11.hpp>

#include <cstdint>
#include <exception>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>

#include "commands.hpp"
#include "spinwit/errors.hpp"
#include "spinwit/spin.hpp"

namespace {

using namespace spinwit;
using namespace spinwit::cli;

// One output target per invocation; empty path means stdout.
struct Sink {
    std::string path;

    template <class Fn>
    void run(Fn&& fn) const {
        if (path.empty()) {
            fn(std::cout);
            return;
        }
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open " + path + " for writing");
        fn(os);
    }
};

Backend parse_backend(const std::string& name) {
    if (name == "exact") return Backend::Exact;
    if (name == "normalized") return Backend::Normalized;
    throw std::invalid_argument("backend must be 'exact' or 'normalized'");
}

Format parse_format(const std::string& name) {
    if (name == "csv") return Format::Csv;
    if (name == "json") return Format::Json;
    throw std::invalid_argument("format must be 'csv' or 'json'");
}

int dispatch(int argc, char** argv) {
    CLI::App app{"total-spin entanglement witness: degeneracies, decidable fractions, "
                 "lattice-path counts, and small-system checks"};
    app.require_subcommand(1);

    std::string spin_token, j_token, backend_name = "exact", format_name = "csv";
    std::string output, input;
    long n = 0, n_min = 1, n_max = 0, exact_cap = 2000, trials = 10000, dim_cap = 4096;
    long long limit = 10000, node_budget = 100'000'000;
    std::uint64_t seed = 1;
    int random_starts = 64;
    double coupling = 1.0;
    bool weighted = false, count_only = false, open_chain = false;

    auto add_spin = [&](CLI::App* cmd) {
        cmd->add_option("--spin,-s", spin_token, "site spin, e.g. 2 or 3/2")->required();
    };
    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("--output,-o", output, "write to this file instead of stdout");
    };

    CLI::App* mult = app.add_subcommand("mult", "multiplicities of every total spin at fixed N");
    add_spin(mult);
    mult->add_option("--n,-n", n, "number of sites")->required();
    mult->add_option("--j,-j", j_token, "report a single total spin, e.g. 0 or 5/2");
    mult->add_option("--backend", backend_name, "exact | normalized");
    mult->add_option("--exact-cap", exact_cap, "largest N the exact backend accepts");
    mult->add_option("--format", format_name, "csv | json");
    add_output(mult);

    CLI::App* seq = app.add_subcommand("seq", "degeneracy sequence d(N, j) for N = 1..N_max");
    add_spin(seq);
    seq->add_option("--j,-j", j_token, "total spin, e.g. 0 or 5/2")->required();
    seq->add_option("--n-max", n_max, "last N of the sequence")->required();
    seq->add_option("--exact-cap", exact_cap, "largest N the exact backend accepts");
    seq->add_option("--format", format_name, "csv | json");
    add_output(seq);

    CLI::App* frac = app.add_subcommand("fraction", "decidable fraction f at one N");
    add_spin(frac);
    frac->add_option("--n,-n", n, "number of sites")->required();
    frac->add_option("--backend", backend_name, "exact | normalized")
        ->default_str("normalized");
    frac->add_option("--exact-cap", exact_cap, "largest N the exact backend accepts");
    add_output(frac);

    CLI::App* series = app.add_subcommand("series", "decidable fraction over a range of N");
    add_spin(series);
    series->add_option("--n-min", n_min, "first N (default 1)");
    series->add_option("--n-max", n_max, "last N")->required();
    series->add_option("--backend", backend_name, "exact | normalized")
        ->default_str("normalized");
    series->add_option("--exact-cap", exact_cap, "largest N the exact backend accepts");
    series->add_option("--output,-o", output,
                       "base CSV path; half-integer spins split into _even/_odd files");

    CLI::App* asym = app.add_subcommand("asymptote", "bracket the large-N limit of f");
    add_spin(asym);
    asym->add_option("--n-max", n_max, "scan rightmost jump below this N (default 10000)");
    add_output(asym);

    CLI::App* fit_cmd = app.add_subcommand("fit", "fit 1/(a s^b + c) to f values per spin");
    fit_cmd->add_option("--input,-i", input, "CSV with columns s,f[,half_width]")->required();
    fit_cmd->add_flag("--weighted", weighted, "weight points by 1/half_width^2");
    fit_cmd->add_option("--seed", seed, "seed for the randomized restarts");
    fit_cmd->add_option("--starts", random_starts, "number of random restarts");
    add_output(fit_cmd);

    CLI::App* paths = app.add_subcommand("paths", "admissible walks reaching (N, j)");
    add_spin(paths);
    paths->add_option("--n,-n", n, "walk length")->required();
    paths->add_option("--j,-j", j_token, "final height")->required();
    paths->add_flag("--count", count_only, "print only the number of walks");
    paths->add_option("--limit", limit, "stop with an error beyond this many walks");
    paths->add_option("--node-budget", node_budget, "search nodes before giving up");
    add_output(paths);

    CLI::App* sim = app.add_subcommand("sim", "dense small-system cross-checks");
    add_spin(sim);
    sim->add_option("--n,-n", n, "number of sites")->required();
    sim->add_option("--trials", trials, "random product states for the floor search");
    sim->add_option("--seed", seed, "seed for all randomized pieces");
    sim->add_option("--coupling", coupling, "chain coupling J");
    sim->add_flag("--open", open_chain, "open chain instead of a ring");
    sim->add_option("--dim-cap", dim_cap, "largest Hilbert-space dimension");
    add_output(sim);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    Sink sink{output};
    if (mult->parsed()) {
        MultArgs args;
        args.s = parse_spin(spin_token);
        args.n = n;
        if (!j_token.empty()) {
            args.has_j = true;
            args.j = parse_spin(j_token);
        }
        args.backend = parse_backend(backend_name);
        args.exact_cap = exact_cap;
        args.format = parse_format(format_name);
        sink.run([&](std::ostream& os) { cmd_mult(args, os); });
    } else if (seq->parsed()) {
        SeqArgs args;
        args.s = parse_spin(spin_token);
        args.j = parse_spin(j_token);
        args.n_max = n_max;
        args.exact_cap = exact_cap;
        args.format = parse_format(format_name);
        sink.run([&](std::ostream& os) { cmd_seq(args, os); });
    } else if (frac->parsed()) {
        FractionArgs args;
        args.s = parse_spin(spin_token);
        args.n = n;
        args.backend = frac->count("--backend") ? parse_backend(backend_name)
                                                : Backend::Normalized;
        args.exact_cap = exact_cap;
        sink.run([&](std::ostream& os) { cmd_fraction(args, os); });
    } else if (series->parsed()) {
        SeriesArgs args;
        args.s = parse_spin(spin_token);
        args.n_min = n_min;
        args.n_max = n_max;
        args.backend = series->count("--backend") ? parse_backend(backend_name)
                                                  : Backend::Normalized;
        args.exact_cap = exact_cap;
        args.output = output;
        cmd_series(args, std::cout);
    } else if (asym->parsed()) {
        AsymptoteArgs args;
        args.s = parse_spin(spin_token);
        if (asym->count("--n-max")) args.n_max = n_max;
        sink.run([&](std::ostream& os) { cmd_asymptote(args, os); });
    } else if (fit_cmd->parsed()) {
        FitArgs args;
        args.input = input;
        args.weighted = weighted;
        args.seed = seed;
        args.random_starts = random_starts;
        sink.run([&](std::ostream& os) { cmd_fit(args, os); });
    } else if (paths->parsed()) {
        PathsArgs args;
        args.s = parse_spin(spin_token);
        args.n = n;
        args.j = parse_spin(j_token);
        args.count_only = count_only;
        args.limit = limit;
        args.node_budget = node_budget;
        sink.run([&](std::ostream& os) { cmd_paths(args, os); });
    } else if (sim->parsed()) {
        SimArgs args;
        args.s = parse_spin(spin_token);
        args.n = static_cast<int>(n);
        args.trials = trials;
        args.seed = seed;
        args.coupling = coupling;
        args.periodic = !open_chain;
        args.dim_cap = dim_cap;
        sink.run([&](std::ostream& os) { cmd_sim(args, os); });
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return dispatch(argc, argv);
    } catch (const CapExceededError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const NoJumpError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
