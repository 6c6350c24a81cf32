#pragma once

#include <gmpxx.h>

#include <map>
#include <utility>
#include <vector>

#include "spinwit/spin.hpp"

namespace spinwit {

enum class Backend { Exact, Normalized };

struct EngineLimits {
    long exact_cap = 2000;  // largest N the exact backend will advance to
};

// Multiplicities of every total spin reachable with n sites of spin s.
// Slot i holds the value at twice_j = twice_j_min + 2*i; twice_j_min is the
// parity bit of n * 2s, so the row spans the full parity class up to n*2s.
template <class Value>
struct MultRow {
    TwiceSpin s;
    long n = 0;
    int twice_j_min = 0;
    std::vector<Value> values;

    int twice_j_max() const {
        return twice_j_min + 2 * (static_cast<int>(values.size()) - 1);
    }
    bool in_range(int twice_j) const {
        return twice_j >= twice_j_min && twice_j <= twice_j_max() &&
               (twice_j - twice_j_min) % 2 == 0;
    }
    Value at_twice(int twice_j) const {
        if (!in_range(twice_j)) return Value(0);
        return values[(twice_j - twice_j_min) / 2];
    }
};

using ExactRow = MultRow<mpz_class>;
using NormalizedRow = MultRow<double>;

// Rows N = 0, 1, 2, ... one at a time; memory stays bounded by O(row).
// Integer counts throughout, sums taken with a running prefix so each row
// costs O(width) big-int additions regardless of the window size.
class ExactRowStream {
  public:
    explicit ExactRowStream(TwiceSpin s, EngineLimits limits = {});
    const ExactRow& row() const { return row_; }
    void advance();  // throws CapExceededError beyond limits.exact_cap

  private:
    EngineLimits limits_;
    ExactRow row_;
    std::vector<mpz_class> prefix_;
    std::vector<mpz_class> next_;
};

// Same recursion scaled by (2s+1) per site: values are m / (2s+1)^n, which
// stay O(1) out to arbitrary N. Window sums are taken directly (at most
// 2s+1 terms) so tiny tail entries never cancel against O(1) prefixes.
class NormalizedRowStream {
  public:
    explicit NormalizedRowStream(TwiceSpin s);
    const NormalizedRow& row() const { return row_; }
    void advance();

  private:
    NormalizedRow row_;
    std::vector<double> next_;
};

ExactRow mult_row_exact(TwiceSpin s, long n, EngineLimits limits = {});
NormalizedRow mult_row_normalized(TwiceSpin s, long n);

// m_s(n, j): number of times total spin j occurs for n sites of spin s.
mpz_class multiplicity(TwiceSpin s, long n, TwiceSpin j, EngineLimits limits = {});

// d_s(n, j) = (2j + 1) * m_s(n, j): dimension of the eigenspace.
mpz_class degeneracy(TwiceSpin s, long n, TwiceSpin j, EngineLimits limits = {});
double degeneracy_normalized(TwiceSpin s, long n, TwiceSpin j);

enum class Provenance { DP, ClosedForm, PathOracle, SpectrumOracle };

// Degeneracies for a rectangle of (n, j), tagged with how they were produced
// so cross-checks can state what they compared.
struct DegeneracyTable {
    TwiceSpin s;
    Provenance provenance = Provenance::DP;
    std::map<std::pair<long, int>, mpz_class> entries;  // (n, twice_j) -> d

    const mpz_class* find(long n, int twice_j) const {
        auto it = entries.find({n, twice_j});
        return it == entries.end() ? nullptr : &it->second;
    }
};

DegeneracyTable degeneracy_table(TwiceSpin s, long n_max, EngineLimits limits = {});

}  // namespace spinwit
