#include "commands.hpp"

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <ostream>

#include "csv_io.hpp"
#include "spinwit/decidability.hpp"
#include "spinwit/fitting.hpp"
#include "spinwit/lattice_paths.hpp"
#include "spinwit/sim.hpp"

namespace spinwit::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

std::string format_g(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json report_head(const char* command) {
    return json{{"spec_version", kSchemaVersion}, {"command", command}};
}

void emit(const json& report, std::ostream& os) { os << report.dump(2) << "\n"; }

}  // namespace

void cmd_mult(const MultArgs& args, std::ostream& os) {
    EngineLimits limits{args.exact_cap};
    json config{{"spin", to_string(args.s)},
                {"n", args.n},
                {"backend", args.backend == Backend::Exact ? "exact" : "normalized"}};
    if (args.backend == Backend::Exact) config["exact_cap"] = args.exact_cap;

    if (args.backend == Backend::Exact) {
        ExactRow row = mult_row_exact(args.s, args.n, limits);
        if (args.has_j) {
            mpz_class value = row.at_twice(args.j.twice());
            if (args.format == Format::Json) {
                json report = report_head("mult");
                report["config"] = config;
                report["config"]["j"] = to_string(args.j);
                report["m"] = value.get_str();
                report["d"] = mpz_class((args.j.twice() + 1) * value).get_str();
                emit(report, os);
            } else {
                os << value.get_str() << "\n";
            }
            return;
        }
        if (args.format == Format::Json) {
            json report = report_head("mult");
            report["config"] = config;
            report["twice_j_min"] = row.twice_j_min;
            json values = json::array();
            for (const mpz_class& v : row.values) values.push_back(v.get_str());
            report["m"] = std::move(values);
            emit(report, os);
        } else {
            os << "twice_j,m\n";
            for (std::size_t i = 0; i < row.values.size(); ++i)
                os << row.twice_j_min + 2 * i << "," << row.values[i].get_str() << "\n";
        }
        return;
    }

    NormalizedRow row = mult_row_normalized(args.s, args.n);
    if (args.has_j) {
        double value = row.at_twice(args.j.twice());
        if (args.format == Format::Json) {
            json report = report_head("mult");
            report["config"] = config;
            report["config"]["j"] = to_string(args.j);
            report["m_normalized"] = value;
            emit(report, os);
        } else {
            os << format_g(value) << "\n";
        }
        return;
    }
    if (args.format == Format::Json) {
        json report = report_head("mult");
        report["config"] = config;
        report["twice_j_min"] = row.twice_j_min;
        report["m_normalized"] = row.values;
        emit(report, os);
    } else {
        os << "twice_j,m_normalized\n";
        for (std::size_t i = 0; i < row.values.size(); ++i)
            os << row.twice_j_min + 2 * i << "," << format_g(row.values[i]) << "\n";
    }
}

void cmd_seq(const SeqArgs& args, std::ostream& os) {
    if (args.n_max < 1) throw std::invalid_argument("seq: N_max must be >= 1");
    EngineLimits limits{args.exact_cap};
    ExactRowStream stream(args.s, limits);
    std::vector<mpz_class> values;
    for (long n = 1; n <= args.n_max; ++n) {
        stream.advance();
        values.push_back((args.j.twice() + 1) * stream.row().at_twice(args.j.twice()));
    }
    if (args.format == Format::Json) {
        json report = report_head("seq");
        report["config"] = {{"spin", to_string(args.s)},
                            {"j", to_string(args.j)},
                            {"n_max", args.n_max},
                            {"exact_cap", args.exact_cap}};
        json list = json::array();
        for (const mpz_class& v : values) list.push_back(v.get_str());
        report["d"] = std::move(list);
        emit(report, os);
        return;
    }
    for (std::size_t i = 0; i < values.size(); ++i)
        os << values[i].get_str() << (i + 1 < values.size() ? ", " : "\n");
}

void cmd_fraction(const FractionArgs& args, std::ostream& os) {
    EngineLimits limits{args.exact_cap};
    os << format_g(fraction(args.s, args.n, args.backend, limits)) << "\n";
}

void cmd_series(const SeriesArgs& args, std::ostream& os) {
    EngineLimits limits{args.exact_cap};
    FractionSeries series = fraction_series(args.s, args.n_min, args.n_max, args.backend, limits);
    if (args.output.empty()) {
        write_series_csv(series, os);
        return;
    }
    for (const std::string& name : write_series_csv_files(series, args.output))
        os << name << "\n";
}

void cmd_asymptote(const AsymptoteArgs& args, std::ostream& os) {
    AsymptoteEstimate est = estimate_f_infinity(args.s, args.n_max);
    json report = report_head("asymptote");
    report["config"] = {{"spin", to_string(args.s)}, {"n_max", args.n_max}};
    report["n_lo"] = est.n_lo;
    report["n_hi"] = est.n_hi;
    report["f_lo"] = est.f_lo;
    report["f_hi"] = est.f_hi;
    report["center"] = est.center;
    report["half_width"] = est.half_width;
    emit(report, os);
}

void cmd_fit(const FitArgs& args, std::ostream& os) {
    std::ifstream in(args.input);
    if (!in) throw std::invalid_argument("fit: cannot open " + args.input);
    FitTable table = read_fit_table(in);
    if (args.weighted) {
        if (!table.has_half_widths())
            throw std::invalid_argument("fit: --weighted needs a half_width column");
        for (std::size_t i = 0; i < table.points.size(); ++i)
            table.points[i].weight = 1.0 / (table.half_widths[i] * table.half_widths[i]);
    }
    FitOptions options;
    options.seed = args.seed;
    options.random_starts = args.random_starts;
    FitParams params = fit(table.points, options);

    json report = report_head("fit");
    report["config"] = {{"input", args.input},
                        {"weighted", args.weighted},
                        {"seed", args.seed},
                        {"random_starts", args.random_starts}};
    report["n_points"] = table.points.size();
    report["a"] = params.a();
    report["b"] = params.b();
    report["c"] = params.c();
    report["ssr"] = params.ssr();
    emit(report, os);
}

void cmd_paths(const PathsArgs& args, std::ostream& os) {
    PathLimits limits{args.node_budget};
    if (args.count_only) {
        os << count_paths(args.s, args.n, args.j, limits).get_str() << "\n";
        return;
    }
    std::vector<LatticePath> paths = list_paths(args.s, args.n, args.j, args.limit, limits);
    for (const LatticePath& path : paths) {
        for (std::size_t x = 0; x < path.twice_heights.size(); ++x)
            os << (x ? ";" : "") << x << "," << path.twice_heights[x];
        os << "\n";
    }
}

void cmd_sim(const SimArgs& args, std::ostream& os) {
    SimLimits limits{args.dim_cap};
    json report = report_head("sim");
    report["config"] = {{"spin", to_string(args.s)}, {"n", args.n},
                        {"trials", args.trials},    {"seed", args.seed},
                        {"coupling", args.coupling}, {"periodic", args.periodic},
                        {"dim_cap", args.dim_cap}};

    // witness spectrum vs the recursion
    auto counts = spectrum_degeneracies(args.s, args.n, limits);
    json spectrum = json::object();
    bool dp_match = true;
    for (const auto& [t, count] : counts) {
        spectrum[to_string(TwiceSpin(t))] = count;
        if (degeneracy(args.s, args.n, TwiceSpin(t)) != static_cast<long>(count))
            dp_match = false;
    }
    report["spectrum"] = {{"degeneracies_by_j", std::move(spectrum)},
                         {"matches_recursion", dp_match}};

    // product-state floor by random search
    McBoundResult mc = separable_bound_mc(args.s, args.n, args.trials, args.seed, limits);
    report["bound_mc"] = {{"trials", mc.trials},
                         {"seed", mc.seed},
                         {"min_value", mc.min_value},
                         {"bound", mc.bound},
                         {"floor_satisfied", mc.min_value >= mc.bound - 1e-9}};

    // local-vector identity against the full contraction on a few states
    double worst_rel = 0.0;
    const int identity_states = 25;
    for (int k = 0; k < identity_states; ++k) {
        ProductState state = random_product_state(args.s, args.n, args.seed + 1000 + k);
        double cheap = product_state_witness_value(state);
        double full = witness_expectation(args.s, args.n, full_vector(state, limits));
        worst_rel = std::max(worst_rel,
                             std::abs(cheap - full) / std::max(1.0, std::abs(full)));
    }
    report["product_identity"] = {{"states", identity_states}, {"max_rel_dev", worst_rel}};

    if (args.n >= 2) {
        CommutatorReport comm = commutator_check(args.s, args.n, args.seed, args.coupling,
                                                 args.periodic, limits);
        report["commutator"] = {{"identity_dev", comm.identity_dev},
                                {"norm_ground", comm.norm_ground},
                                {"norm_stretched", comm.norm_stretched},
                                {"norm_random", comm.norm_random},
                                {"ground_energy", comm.ground_energy},
                                {"ground_witness", comm.ground_witness}};
    }
    emit(report, os);
}

}  // namespace spinwit::cli
