#pragma once

#include <compare>
#include <stdexcept>
#include <string>

namespace spinwit {

// Spin (or total-spin) quantum number stored as 2j. Keeping twice the value
// makes parity constraints and triangle inequalities exact integer tests.
class TwiceSpin {
  public:
    constexpr TwiceSpin() = default;
    constexpr explicit TwiceSpin(int twice) : twice_(twice) {
        if (twice < 0) throw std::invalid_argument("spin: 2j must be non-negative");
    }

    constexpr int twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr double value() const { return 0.5 * twice_; }

    friend constexpr auto operator<=>(TwiceSpin, TwiceSpin) = default;

  private:
    int twice_ = 0;
};

// "1/2", "3/2", ... for half-odd values, plain integers otherwise.
std::string to_string(TwiceSpin j);

// Parses the same grammar to_string emits. Rejects everything else,
// including decimal notation and non-reduced fractions.
TwiceSpin parse_spin(const std::string& text);

constexpr int irrep_dim(TwiceSpin j) { return j.twice() + 1; }

// 1 iff the spin-j3 representation occurs in [j1] x [j2], i.e. the three
// values satisfy the triangle rule and sum to an integer. Multiplicity-free,
// so the coefficient is 0 or 1; symmetric in all three arguments.
int tp_coeff(TwiceSpin j1, TwiceSpin j2, TwiceSpin j3);

// Contiguous range of height increments, stored as twice-values with an
// implicit stride of 2. Ordered traversal goes largest step first.
struct StepRange {
    int twice_hi = 0;
    int twice_lo = 0;

    int size() const { return (twice_hi - twice_lo) / 2 + 1; }
    bool contains(int twice_delta) const {
        return twice_delta >= twice_lo && twice_delta <= twice_hi &&
               (twice_delta - twice_lo) % 2 == 0;
    }
};

// Increments delta with tp_coeff(y, s, y + delta) = 1: from +2s down to
// -2s in unit spin steps, truncated so the walk never goes below zero.
StepRange allowed_steps(TwiceSpin s, TwiceSpin y);

}  // namespace spinwit
