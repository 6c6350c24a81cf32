#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "spinwit/multiplicity.hpp"
#include "spinwit/spin.hpp"

namespace spinwit::cli {

enum class Format { Csv, Json };

struct MultArgs {
    TwiceSpin s;
    long n = 0;
    bool has_j = false;
    TwiceSpin j;
    Backend backend = Backend::Exact;
    long exact_cap = 2000;
    Format format = Format::Csv;
};

struct SeqArgs {
    TwiceSpin s;
    TwiceSpin j;
    long n_max = 0;
    long exact_cap = 2000;
    Format format = Format::Csv;
};

struct FractionArgs {
    TwiceSpin s;
    long n = 0;
    Backend backend = Backend::Normalized;
    long exact_cap = 2000;
};

struct SeriesArgs {
    TwiceSpin s;
    long n_min = 1;
    long n_max = 0;
    Backend backend = Backend::Normalized;
    long exact_cap = 2000;
    std::string output;  // empty: single CSV on stdout, no parity split
};

struct AsymptoteArgs {
    TwiceSpin s;
    long n_max = 10000;
};

struct FitArgs {
    std::string input;
    bool weighted = false;
    std::uint64_t seed = 1;
    int random_starts = 64;
};

struct PathsArgs {
    TwiceSpin s;
    long n = 0;
    TwiceSpin j;
    bool count_only = false;
    long long limit = 10000;
    long long node_budget = 100'000'000;
};

struct SimArgs {
    TwiceSpin s;
    int n = 0;
    long trials = 10000;
    std::uint64_t seed = 1;
    double coupling = 1.0;
    bool periodic = true;
    long dim_cap = 4096;
};

void cmd_mult(const MultArgs& args, std::ostream& os);
void cmd_seq(const SeqArgs& args, std::ostream& os);
void cmd_fraction(const FractionArgs& args, std::ostream& os);
void cmd_series(const SeriesArgs& args, std::ostream& os);
void cmd_asymptote(const AsymptoteArgs& args, std::ostream& os);
void cmd_fit(const FitArgs& args, std::ostream& os);
void cmd_paths(const PathsArgs& args, std::ostream& os);
void cmd_sim(const SimArgs& args, std::ostream& os);

}  // namespace spinwit::cli
